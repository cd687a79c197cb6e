"""Integrable body descriptions for brute-force pairwise summation.

Every region maps the unit cube onto itself with a Jacobian that keeps the
Casimir-Polder integrand smooth:

* bounded regions use plain polar/spherical coordinates with the radius
  linear in the cube coordinate (``r = R u``), so no square-root cusps at
  the centre;
* infinite regions use inverse-radius coordinates around an *anchor* point
  outside them (normally the centre of the bounded partner).  With
  ``r ~ 1/w`` the ``s^-6`` / ``s^-7`` tails become polynomial in ``w`` and no
  truncation is needed.

The 2D regions describe cylinder cross-sections (energies per unit length);
the 3D regions describe bodies in space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .errors import GeometryError

TWO_PI = 2.0 * math.pi


def _vec(v, dim):
    arr = tuple(float(x) for x in v)
    if len(arr) != dim:
        raise GeometryError(f"expected a {dim}-vector, got {v!r}")
    return arr


def _positive(name, value):
    if not value > 0:
        raise GeometryError(f"{name} must be > 0, got {value!r}")


def _check_side(side):
    if side not in (1, -1):
        raise GeometryError(f"side must be +1 or -1, got {side!r}")


# ---------------------------------------------------------------- 2D regions


@dataclass(frozen=True)
class Disk:
    radius: float
    center: tuple = (0.0, 0.0)

    bounded = True
    dim = 2

    def __post_init__(self):
        _positive("radius", self.radius)
        object.__setattr__(self, "center", _vec(self.center, 2))

    @property
    def scale(self):
        return self.radius + math.hypot(*self.center)

    @property
    def area(self):
        return math.pi * self.radius**2

    def map_unit(self, u, anchor=None):
        r = self.radius * u[:, 0]
        th = TWO_PI * u[:, 1]
        pts = np.column_stack([self.center[0] + r * np.cos(th), self.center[1] + r * np.sin(th)])
        return pts, TWO_PI * self.radius * r


@dataclass(frozen=True)
class Annulus:
    r_in: float
    r_out: float
    center: tuple = (0.0, 0.0)

    bounded = True
    dim = 2

    def __post_init__(self):
        _positive("r_in", self.r_in)
        _positive("r_out", self.r_out)
        if not self.r_in < self.r_out:
            raise GeometryError(f"need r_in < r_out, got {self.r_in}, {self.r_out}")
        object.__setattr__(self, "center", _vec(self.center, 2))

    @property
    def radius(self):
        return self.r_out

    @property
    def scale(self):
        return self.r_out + math.hypot(*self.center)

    def map_unit(self, u, anchor=None):
        width = self.r_out - self.r_in
        r = self.r_in + width * u[:, 0]
        th = TWO_PI * u[:, 1]
        pts = np.column_stack([self.center[0] + r * np.cos(th), self.center[1] + r * np.sin(th)])
        return pts, TWO_PI * width * r


@dataclass(frozen=True)
class ExteriorDisk:
    """The unbounded set ``|x - center| > radius`` (a cylindrical cavity in a medium)."""

    radius: float
    center: tuple = (0.0, 0.0)

    bounded = False
    dim = 2

    def __post_init__(self):
        _positive("radius", self.radius)
        object.__setattr__(self, "center", _vec(self.center, 2))

    @property
    def scale(self):
        return self.radius + math.hypot(*self.center)

    def map_unit(self, u, anchor=None):
        # w = radius^2 / rho^2 in (0, 1]
        w = u[:, 0]
        rho = self.radius / np.sqrt(w)
        th = TWO_PI * u[:, 1]
        pts = np.column_stack([self.center[0] + rho * np.cos(th),
                               self.center[1] + rho * np.sin(th)])
        return pts, math.pi * self.radius**2 / (w * w)


@dataclass(frozen=True)
class HalfPlane:
    """The set ``side * (x - offset) > 0``."""

    offset: float = 0.0
    side: int = 1

    bounded = False
    dim = 2

    def __post_init__(self):
        _check_side(self.side)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def scale(self):
        return abs(self.offset)

    def distance_outside(self, point):
        """Distance from an outside point to the boundary line (negative if inside)."""
        return self.side * (self.offset - point[0])

    def map_unit(self, u, anchor):
        h = self.distance_outside(anchor)
        w = u[:, 0]
        phi = math.pi * (u[:, 1] - 0.5)
        cos_phi = np.cos(phi)
        r = h / (cos_phi * w)
        pts = np.column_stack([anchor[0] + self.side * r * cos_phi,
                               anchor[1] + r * np.sin(phi)])
        return pts, math.pi * h * h / (cos_phi**2 * w**3)


Region2D = Union[Disk, Annulus, ExteriorDisk, HalfPlane]


# ---------------------------------------------------------------- 3D regions


@dataclass(frozen=True)
class Ball:
    radius: float
    center: tuple = (0.0, 0.0, 0.0)

    bounded = True
    dim = 3

    def __post_init__(self):
        _positive("radius", self.radius)
        object.__setattr__(self, "center", _vec(self.center, 3))

    @property
    def scale(self):
        return self.radius + math.sqrt(sum(c * c for c in self.center))

    @property
    def volume(self):
        return 4.0 * math.pi * self.radius**3 / 3.0

    def map_unit(self, u, anchor=None):
        r = self.radius * u[:, 0]
        th = math.pi * u[:, 1]
        ph = TWO_PI * u[:, 2]
        st = np.sin(th)
        pts = np.column_stack([self.center[0] + r * st * np.cos(ph),
                               self.center[1] + r * st * np.sin(ph),
                               self.center[2] + r * np.cos(th)])
        return pts, (self.radius * math.pi * TWO_PI) * r * r * st


@dataclass(frozen=True)
class CylinderSegment:
    """Finite solid cylinder with its axis along z."""

    radius: float
    length: float
    center: tuple = (0.0, 0.0, 0.0)

    bounded = True
    dim = 3

    def __post_init__(self):
        _positive("radius", self.radius)
        _positive("length", self.length)
        object.__setattr__(self, "center", _vec(self.center, 3))

    @property
    def scale(self):
        return self.radius + 0.5 * self.length + math.sqrt(sum(c * c for c in self.center))

    def map_unit(self, u, anchor=None):
        r = self.radius * u[:, 0]
        th = TWO_PI * u[:, 1]
        z = self.center[2] + self.length * (u[:, 2] - 0.5)
        pts = np.column_stack([self.center[0] + r * np.cos(th),
                               self.center[1] + r * np.sin(th), z])
        return pts, (TWO_PI * self.radius * self.length) * r


def _spherical_towards(anchor, side, r, th, ph):
    st = np.sin(th)
    return np.column_stack([anchor[0] + r * st * np.cos(ph),
                            anchor[1] + r * st * np.sin(ph),
                            anchor[2] + side * r * np.cos(th)])


@dataclass(frozen=True)
class HalfSpace:
    """The set ``side * (z - offset) > 0``."""

    offset: float = 0.0
    side: int = -1

    bounded = False
    dim = 3

    def __post_init__(self):
        _check_side(self.side)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def scale(self):
        return abs(self.offset)

    def distance_outside(self, point):
        return self.side * (self.offset - point[2])

    def map_unit(self, u, anchor):
        h = self.distance_outside(anchor)
        w = u[:, 0]
        th = 0.5 * math.pi * u[:, 1]
        ph = TWO_PI * u[:, 2]
        ct = np.cos(th)
        r = h / (ct * w)
        pts = _spherical_towards(anchor, self.side, r, th, ph)
        return pts, (math.pi * math.pi * h**3) * np.sin(th) / (ct**3 * w**4)


@dataclass(frozen=True)
class Slab:
    """The layer ``z0 < z < z0 + thickness``, unbounded in x and y."""

    z0: float
    thickness: float

    bounded = False
    dim = 3

    def __post_init__(self):
        _positive("thickness", self.thickness)
        object.__setattr__(self, "z0", float(self.z0))

    @property
    def scale(self):
        return abs(self.z0) + self.thickness

    def map_unit(self, u, anchor):
        top = self.z0 + self.thickness
        if anchor[2] <= self.z0:
            side, near = 1, self.z0 - anchor[2]
        elif anchor[2] >= top:
            side, near = -1, anchor[2] - top
        else:
            raise GeometryError("anchor lies inside the slab")
        th = 0.5 * math.pi * u[:, 1]
        ph = TWO_PI * u[:, 2]
        ct = np.cos(th)
        along = near + self.thickness * u[:, 0]
        r = along / ct
        pts = _spherical_towards(anchor, side, r, th, ph)
        return pts, (math.pi * math.pi * self.thickness) * along**2 * np.sin(th) / ct**3


Region3D = Union[Ball, CylinderSegment, HalfSpace, Slab]


# ---------------------------------------------------------------- separations


class Separation(NamedTuple):
    distance: float
    overlap: bool


def _sep(d):
    return Separation(d, False) if d > 0 else Separation(0.0, True)


def _dist(p, q):
    return math.sqrt(sum((x - y) ** 2 for x, y in zip(p, q)))


def _interval_gap(x, lo, hi):
    return max(lo - x, x - hi, 0.0)


def _sep_2d(g1, g2):
    t1, t2 = type(g1), type(g2)
    if t1 in (Disk, Annulus) and t2 in (Disk, Annulus):
        D = _dist(g1.center, g2.center)
        r1_out = g1.radius
        r2_out = g2.radius
        if D - r1_out - r2_out > 0:
            return _sep(D - r1_out - r2_out)
        # one body sitting in the other's hole
        for inner, outer in ((g1, g2), (g2, g1)):
            if isinstance(outer, Annulus) and D + inner.radius < outer.r_in:
                return _sep(outer.r_in - D - inner.radius)
        return Separation(0.0, True)
    if t1 in (Disk, Annulus) and t2 is ExteriorDisk:
        return _sep(g2.radius - _dist(g1.center, g2.center) - g1.radius)
    if t1 in (Disk, Annulus) and t2 is HalfPlane:
        return _sep(g2.distance_outside(g1.center) - g1.radius)
    if t1 is HalfPlane and t2 is HalfPlane:
        if g1.side != g2.side:
            lo = g1 if g1.side == 1 else g2
            hi = g2 if lo is g1 else g1
            return _sep(lo.offset - hi.offset)
        return Separation(0.0, True)
    if (t1, t2) in ((ExteriorDisk, ExteriorDisk), (ExteriorDisk, HalfPlane)):
        return Separation(0.0, True)
    return None


def _cyl_point_gap(cyl, p):
    radial = max(math.hypot(p[0] - cyl.center[0], p[1] - cyl.center[1]) - cyl.radius, 0.0)
    axial = _interval_gap(p[2], cyl.center[2] - 0.5 * cyl.length, cyl.center[2] + 0.5 * cyl.length)
    return math.hypot(radial, axial)


def _z_extent(g):
    if isinstance(g, Ball):
        return g.center[2] - g.radius, g.center[2] + g.radius
    if isinstance(g, CylinderSegment):
        return g.center[2] - 0.5 * g.length, g.center[2] + 0.5 * g.length
    if isinstance(g, Slab):
        return g.z0, g.z0 + g.thickness
    if g.side == 1:
        return g.offset, math.inf
    return -math.inf, g.offset


def _sep_3d(g1, g2):
    t1, t2 = type(g1), type(g2)
    if t1 is Ball and t2 is Ball:
        return _sep(_dist(g1.center, g2.center) - g1.radius - g2.radius)
    if t1 is Ball and t2 is CylinderSegment:
        return _sep(_cyl_point_gap(g2, g1.center) - g1.radius)
    if t1 is CylinderSegment and t2 is CylinderSegment:
        D = math.hypot(g1.center[0] - g2.center[0], g1.center[1] - g2.center[1])
        radial = max(D - g1.radius - g2.radius, 0.0)
        axial = max(abs(g1.center[2] - g2.center[2]) - 0.5 * (g1.length + g2.length), 0.0)
        return _sep(math.hypot(radial, axial))
    if t2 in (HalfSpace, Slab) or (t1, t2) == (Slab, Slab):
        # every supported 3D body is a z-extent times an xy-shape, so against
        # layers only the z-gap matters
        lo1, hi1 = _z_extent(g1)
        lo2, hi2 = _z_extent(g2)
        return _sep(max(lo2 - hi1, lo1 - hi2))
    return None


_ORDER = {Disk: 0, Annulus: 1, ExteriorDisk: 2, HalfPlane: 3,
          Ball: 0, CylinderSegment: 1, Slab: 2, HalfSpace: 3}


def min_separation(g1, g2) -> Separation:
    """Exact minimum distance between two regions of the same dimension.

    Returns ``Separation(0.0, True)`` when the regions overlap or touch.
    """
    if g1.dim != g2.dim:
        raise GeometryError(f"cannot pair a {g1.dim}D region with a {g2.dim}D region")
    if _ORDER[type(g1)] > _ORDER[type(g2)]:
        g1, g2 = g2, g1
    result = _sep_2d(g1, g2) if g1.dim == 2 else _sep_3d(g1, g2)
    if result is None:
        raise GeometryError(f"no separation rule for {type(g1).__name__} / {type(g2).__name__}")
    return result
