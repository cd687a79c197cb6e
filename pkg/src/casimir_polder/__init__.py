"""Casimir-Polder energies and forces between dilute dielectric bodies.

Closed forms for cylinders, spheres, planes and eccentric cylinders, plus a
brute-force pairwise integrator that checks them independently.
"""

from .closed_forms import (continue_cyl_cyl_to_contained, eccentric_series, energy_coaxial,
                           energy_cyl_cyl, energy_cyl_plane, energy_eccentric, energy_plates_dilute,
                           energy_sphere_plane, force_eccentric, self_energy_dilute_cylinder,
                           self_energy_regulated)
from .cubature import QuadratureConfig
from .errors import DomainError, GeometryError, NotConvergedError
from .kernel import MaterialPair, coupling_n
from .pairwise import energy_pair_2d, energy_pair_3d
from .results import EnergyResult, UnitKind

__version__ = "0.1.0"

__all__ = [
    "DomainError", "EnergyResult", "GeometryError", "MaterialPair", "NotConvergedError",
    "QuadratureConfig", "UnitKind", "continue_cyl_cyl_to_contained", "coupling_n",
    "eccentric_series", "energy_coaxial", "energy_cyl_cyl", "energy_cyl_plane", "energy_eccentric",
    "energy_pair_2d", "energy_pair_3d", "energy_plates_dilute", "energy_sphere_plane",
    "force_eccentric", "self_energy_dilute_cylinder", "self_energy_regulated",
]
