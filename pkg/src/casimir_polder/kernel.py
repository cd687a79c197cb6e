"""Casimir-Polder pair kernel built from the free electromagnetic Green's dyadic.

Natural units (hbar = c = 1) throughout.  The chain implemented here is

    G0(R)            = exp(-|zeta| R) / (4 pi R)
    Gamma0_ij        = (d_i d_j - zeta^2 delta_ij) G0
    sum_ij Gamma0^2  = (6 + 12t + 10t^2 + 4t^3 + 2t^4) exp(-2t) / (4 pi R^3)^2
    integral over zeta  -> 23 / (64 pi^3 R^7)

so that two dilute bodies with susceptibilities chi1 = eps1 - 1 and
chi2 = eps2 - 1 interact through

    E12 = -23 / (4 pi)^3  int dV int dV'  chi1 chi2 / |r - r'|^7.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from .errors import DomainError, NotConvergedError

FOUR_PI = 4.0 * math.pi
CP_COEFFICIENT = 23.0
# axial integral  int_{-inf}^{inf} dz (1 + z^2)^(-7/2)
AXIAL_FACTOR = 16.0 / 15.0


def coupling_n(chi1: float, chi2: float) -> float:
    """Material coupling ``N = 23 chi1 chi2 / (640 pi^2)``."""
    chi1 = float(chi1)
    chi2 = float(chi2)
    if not (math.isfinite(chi1) and math.isfinite(chi2)):
        raise DomainError("susceptibilities must be finite")
    return 23.0 * chi1 * chi2 / (640.0 * math.pi**2)


@dataclass(frozen=True)
class MaterialPair:
    """Dielectric contrasts of two dilute bodies.

    ``n`` is always recomputed from ``chi1`` and ``chi2``; it cannot be
    passed in.  Use :meth:`from_coupling` when only ``N`` is known.
    """

    chi1: float
    chi2: float
    n: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "chi1", float(self.chi1))
        object.__setattr__(self, "chi2", float(self.chi2))
        object.__setattr__(self, "n", coupling_n(self.chi1, self.chi2))

    @classmethod
    def from_permittivities(cls, eps1: float, eps2: float) -> "MaterialPair":
        return cls(float(eps1) - 1.0, float(eps2) - 1.0)

    @classmethod
    def from_coupling(cls, n: float) -> "MaterialPair":
        """Pair with ``chi2 = 1`` and ``chi1`` chosen so that ``N == n``."""
        return cls(640.0 * math.pi**2 * float(n) / 23.0, 1.0)

    @property
    def product(self) -> float:
        return self.chi1 * self.chi2


@dataclass(frozen=True)
class KernelPoint:
    """Separation ``R`` and Euclidean frequency ``zeta``; ``t = |zeta| R``."""

    separation: float
    zeta: float
    t: float = field(init=False)

    def __post_init__(self):
        if not self.separation > 0.0:
            raise DomainError(f"separation must be > 0, got {self.separation!r}")
        object.__setattr__(self, "t", abs(self.zeta) * self.separation)


def _check_positive(name, value):
    arr = np.asarray(value, dtype=float)
    if np.any(~(arr > 0.0)):
        raise DomainError(f"{name} must be > 0 (coincident points are singular)")
    return arr


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def scalar_green(r_sep, zeta):
    """Euclidean scalar Helmholtz Green's function ``exp(-|zeta| R)/(4 pi R)``."""
    r = _check_positive("r_sep", r_sep)
    return _scalar_or_array(np.exp(-np.abs(zeta) * r) / (FOUR_PI * r))


def dyadic_tensor(r, r_prime, zeta) -> np.ndarray:
    """Full 3x3 free Green's dyadic ``(grad grad - zeta^2) G0`` at ``r - r'``."""
    sep = np.asarray(r, dtype=float) - np.asarray(r_prime, dtype=float)
    dist = float(np.linalg.norm(sep))
    if not dist > 0.0:
        raise DomainError("dyadic is singular at coincident points")
    t = abs(zeta) * dist
    iso = -(1.0 + t + t * t)
    aniso = 3.0 + 3.0 * t + t * t
    rhat = sep / dist
    scale = math.exp(-t) / (FOUR_PI * dist**3)
    return (iso * np.eye(3) + aniso * np.outer(rhat, rhat)) * scale


def dyadic_component(r, r_prime, zeta, i: int, j: int) -> float:
    """Component ``(i, j)`` of :func:`dyadic_tensor`; axes are 0, 1, 2."""
    if i not in (0, 1, 2) or j not in (0, 1, 2):
        raise IndexError("axis indices must be 0, 1 or 2")
    return float(dyadic_tensor(r, r_prime, zeta)[i, j])


def contraction_polynomial(t):
    """``(6 + 12t + 10t^2 + 4t^3 + 2t^4) exp(-2t)``.

    This is ``sum_ij Gamma0_ij Gamma0_ij`` with the factor ``(4 pi R^3)^-2``
    stripped off.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0):
        raise DomainError("t = |zeta| R must be >= 0")
    poly = 6.0 + t * (12.0 + t * (10.0 + t * (4.0 + 2.0 * t)))
    return _scalar_or_array(poly * np.exp(-2.0 * t))


# coefficients of the frequency integrand after u = 2 |zeta| R
_FREQ_POLY = (6.0, 6.0, 2.5, 0.5, 0.125)


def frequency_integrand(u):
    u = np.asarray(u, dtype=float)
    c0, c1, c2, c3, c4 = _FREQ_POLY
    return _scalar_or_array(np.exp(-u) * (c0 + u * (c1 + u * (c2 + u * (c3 + u * c4)))))


def frequency_tail_bound(upper: float) -> float:
    """Exact ``int_upper^inf exp(-u) p(u) du`` for the quartic ``p``.

    Uses ``int_U^inf e^-u p = e^-U (p + p' + p'' + ...)(U)``.
    """
    coeffs = list(_FREQ_POLY)
    total = 0.0
    while coeffs:
        total += sum(c * upper**k for k, c in enumerate(coeffs))
        coeffs = [k * c for k, c in enumerate(coeffs)][1:]
    return math.exp(-upper) * total


@functools.lru_cache(maxsize=16)
def _truncation_point(tail_tol: float) -> float:
    upper = 1.0
    while frequency_tail_bound(upper) >= tail_tol:
        upper += 1.0
    return upper


_GL_HIGH = np.polynomial.legendre.leggauss(20)
_GL_LOW = np.polynomial.legendre.leggauss(10)


def _panel_rule(lo, hi, rule):
    nodes, weights = rule
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    u = mid[:, None] + half[:, None] * nodes[None, :]
    return half * (frequency_integrand(u) @ weights)


def frequency_integral(upper: float | None = None, tail_tol: float = 1e-14,
                       tol: float = 1e-13, max_panels: int = 4096) -> float:
    """Integrate the imaginary-frequency integrand; the result is 23.

    The infinite range is truncated at the smallest integer ``upper`` whose
    analytic tail lies below ``tail_tol``.  The finite piece uses composite
    20-point Gauss-Legendre panels; each panel's residual is its difference
    from the 10-point rule, and panels are bisected until the summed residual
    is below ``tol``.
    """
    if upper is None:
        upper = _truncation_point(tail_tol)
    edges = np.linspace(0.0, upper, 9)
    lo, hi = edges[:-1], edges[1:]
    while True:
        high = _panel_rule(lo, hi, _GL_HIGH)
        resid = np.abs(high - _panel_rule(lo, hi, _GL_LOW))
        if resid.sum() <= tol:
            return float(math.fsum(high))
        if 2 * len(lo) > max_panels:
            raise NotConvergedError(
                f"frequency integral did not converge (residual {resid.sum():.3e})",
                float(math.fsum(high)))
        bad = resid > tol / len(lo)
        mid = 0.5 * (lo[bad] + hi[bad])
        lo = np.concatenate([lo[~bad], lo[bad], mid])
        hi = np.concatenate([hi[~bad], mid, hi[bad]])
        order = np.argsort(lo)
        lo, hi = lo[order], hi[order]


def pair_kernel_3d(s, mat: MaterialPair):
    """Energy density per volume pair, ``-23 chi1 chi2 / ((4 pi)^3 s^7)``.

    ``E12 = int dV int dV' pair_kernel_3d(|r - r'|, mat)``.
    """
    s = _check_positive("s", s)
    return _scalar_or_array(-CP_COEFFICIENT * mat.product / FOUR_PI**3 / s**7)


def pair_kernel_2d(s, mat: MaterialPair):
    """Per-unit-length kernel between parallel line elements at in-plane distance ``s``.

    Axial integration of :func:`pair_kernel_3d` multiplies by ``16/15`` and
    drops one power of ``s``, leaving ``-32 N / (3 pi s^6)``.
    """
    s = _check_positive("s", s)
    return _scalar_or_array(-32.0 * mat.n / (3.0 * math.pi) / s**6)
