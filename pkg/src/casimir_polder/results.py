"""Result container shared by closed forms and numerical integrators."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class UnitKind(str, Enum):
    """Dimension of an energy value in units where hbar = c = 1."""

    ENERGY = "energy"                          # L^-1
    ENERGY_PER_LENGTH = "energy_per_length"    # L^-2
    ENERGY_PER_AREA = "energy_per_area"        # L^-3

    @property
    def dimension(self) -> str:
        return {"energy": "L^-1", "energy_per_length": "L^-2", "energy_per_area": "L^-3"}[self.value]


@dataclass(frozen=True)
class EnergyResult:
    value: float
    unit_kind: UnitKind
    error_estimate: float = 0.0
    evaluations_used: int = 0
    method: str = "closed-form"
    notes: tuple = ()

    def __post_init__(self):
        if not self.error_estimate >= 0.0:
            raise ValueError("error_estimate must be >= 0")

    def __float__(self):
        return float(self.value)
