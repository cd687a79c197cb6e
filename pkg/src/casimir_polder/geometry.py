"""Validated descriptions of the closed-form configurations.

Each variant knows its closed-form energy and, where one is defined, the
closed-form force.  Construction raises :class:`GeometryError` on touching
or overlapping bodies.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from . import closed_forms as cf
from .errors import GeometryError
from .results import UnitKind


def _positive(**dims):
    for name, value in dims.items():
        if not value > 0:
            raise GeometryError(f"{name} must be > 0, got {value!r}")


@dataclass(frozen=True)
class ParallelCylinders:
    a: float
    b: float
    r_axes: float

    kind = "cyl-cyl"
    unit_kind = UnitKind.ENERGY_PER_LENGTH

    def __post_init__(self):
        _positive(a=self.a, b=self.b, r_axes=self.r_axes)
        if not self.r_axes > self.a + self.b:
            raise GeometryError(f"r_axes={self.r_axes} must exceed a+b={self.a + self.b}")

    def energy(self, n):
        return cf.energy_cyl_cyl(self.a, self.b, self.r_axes, n)


@dataclass(frozen=True)
class CylinderPlane:
    a: float
    z: float

    kind = "cyl-plane"
    unit_kind = UnitKind.ENERGY_PER_LENGTH

    def __post_init__(self):
        _positive(a=self.a, z=self.z)
        if not self.z > self.a:
            raise GeometryError(f"z={self.z} must exceed a={self.a}")

    def energy(self, n):
        return cf.energy_cyl_plane(self.a, self.z, n)


@dataclass(frozen=True)
class SpherePlane:
    a: float
    z: float

    kind = "sphere-plane"
    unit_kind = UnitKind.ENERGY

    def __post_init__(self):
        _positive(a=self.a, z=self.z)
        if not self.z > self.a:
            raise GeometryError(f"z={self.z} must exceed a={self.a}")

    @property
    def volume(self):
        return 4.0 * math.pi * self.a**3 / 3.0

    def energy(self, n):
        return cf.energy_sphere_plane(self.a, self.z, n)


@dataclass(frozen=True)
class Coaxial:
    a: float
    b: float

    kind = "coaxial"
    unit_kind = UnitKind.ENERGY_PER_LENGTH

    def __post_init__(self):
        _positive(a=self.a, b=self.b)
        if not self.a < self.b:
            raise GeometryError(f"need a < b, got a={self.a}, b={self.b}")

    def energy(self, n):
        return cf.energy_coaxial(self.a, self.b, n)


@dataclass(frozen=True)
class Eccentric:
    a: float
    b: float
    offset: float

    kind = "eccentric"
    unit_kind = UnitKind.ENERGY_PER_LENGTH

    def __post_init__(self):
        _positive(a=self.a, b=self.b)
        if self.offset < 0:
            raise GeometryError(f"offset must be >= 0, got {self.offset!r}")
        if not self.offset + self.a < self.b:
            raise GeometryError(
                f"offset+a={self.offset + self.a} must be < b={self.b} (rod touches cavity)")

    def energy(self, n):
        return cf.energy_eccentric(self.a, self.b, self.offset, n)

    def force(self, n):
        return cf.force_eccentric(self.a, self.b, self.offset, n)


@dataclass(frozen=True)
class Plates:
    d: float

    kind = "plates"
    unit_kind = UnitKind.ENERGY_PER_AREA

    def __post_init__(self):
        _positive(d=self.d)

    def energy(self, n):
        return cf.energy_plates_dilute(self.d, n)


@dataclass(frozen=True)
class SelfCylinder:
    """Single cylinder; ``beta`` selects a member of the regulator family (5 is physical)."""

    a: float
    beta: float = 5.0

    kind = "self-cylinder"
    unit_kind = UnitKind.ENERGY_PER_LENGTH

    def __post_init__(self):
        _positive(a=self.a)
        if float(self.beta) in (1.0, 2.0, 3.0):
            raise GeometryError(f"beta={self.beta} is a pole of the regulated self-energy")

    def energy(self, n):
        if self.beta == 5.0:
            return cf.self_energy_dilute_cylinder(self.a, n)
        return cf.self_energy_regulated(self.a, n, self.beta)


GEOMETRIES = {
    cls.kind: cls
    for cls in (ParallelCylinders, CylinderPlane, SpherePlane, Coaxial, Eccentric, Plates,
                SelfCylinder)
}


def dimension_names(kind: str) -> tuple:
    return tuple(f.name for f in dataclasses.fields(GEOMETRIES[kind]))


def make_geometry(kind: str, **dims):
    """Build a geometry variant from its kind tag and named dimensions."""
    try:
        cls = GEOMETRIES[kind]
    except KeyError:
        raise GeometryError(
            f"unknown geometry kind {kind!r}; expected one of {sorted(GEOMETRIES)}") from None
    names = dimension_names(kind)
    unknown = set(dims) - set(names)
    if unknown:
        raise GeometryError(f"{kind}: unknown dimension(s) {sorted(unknown)}; expected {names}")
    try:
        return cls(**{k: float(v) for k, v in dims.items()})
    except TypeError as exc:
        raise GeometryError(f"{kind}: {exc}") from None
