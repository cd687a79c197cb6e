"""Closed-form interaction energies of dilute dielectric bodies.

Every function takes the material coupling ``n`` (see
:func:`casimir_polder.kernel.coupling_n`) and lengths in one common unit.
Cylinder results are energies per unit length (L^-2); sphere-plane is a
total energy (L^-1); plate results are energies per unit area (L^-3).
"""

from __future__ import annotations

import math
import sys
import warnings
from dataclasses import dataclass

from .errors import DomainError
from .results import EnergyResult, UnitKind

_EPS = sys.float_info.epsilon

# (k + m) beyond which the float binomial recurrence could overflow
_BINOMIAL_GUARD = 1000


def _require(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


def energy_cyl_cyl(a: float, b: float, r_axes: float, n: float) -> float:
    """Two parallel, externally separated cylinders of radii ``a`` and ``b``."""
    _require(a > 0 and b > 0, "radii must be positive")
    _require(r_axes > a + b, f"cylinders touch or overlap: r_axes={r_axes} <= a+b={a + b}")
    R = r_axes
    num = 1.0 - 0.5 * (a * a + b * b) / R**2 - 0.5 * ((a * a - b * b) / R**2) ** 2
    den = (1.0 - ((a + b) / R) ** 2) * (1.0 - ((a - b) / R) ** 2)
    return -32.0 * math.pi * n / 3.0 * (a * a * b * b / R**6) * num / den**2.5


def energy_cyl_plane(a: float, z: float, n: float) -> float:
    """Cylinder of radius ``a`` whose axis is a distance ``z`` above a half-space."""
    _require(a > 0, "radius must be positive")
    _require(z > a, f"cylinder intersects plane: z={z} <= a={a}")
    return -n * math.pi * a * a / z**4 / (1.0 - (a / z) ** 2) ** 2.5


def energy_cyl_plane_angular(a: float, z: float, n: float) -> float:
    """Same energy as :func:`energy_cyl_plane`, in the form ``-N pi a^2 z/(z^2-a^2)^(5/2)``."""
    _require(a > 0, "radius must be positive")
    _require(z > a, f"cylinder intersects plane: z={z} <= a={a}")
    return -n * math.pi * a * a * z / ((z - a) * (z + a)) ** 2.5


def energy_sphere_plane(a: float, z: float, n: float) -> float:
    """Sphere of radius ``a`` with centre at height ``z`` above a half-space (total energy)."""
    _require(a > 0, "radius must be positive")
    _require(z > a, f"sphere intersects plane: z={z} <= a={a}")
    volume = 4.0 * math.pi * a**3 / 3.0
    return -n * volume / z**4 / (1.0 - (a / z) ** 2) ** 2


def slab_element(z: float, n: float) -> float:
    """Energy per area per thickness of a thin sheet a distance ``z`` from a half-space."""
    _require(z > 0, f"sheet must lie outside the half-space: z={z}")
    return -n / z**4


def energy_plates_dilute(d: float, n: float) -> float:
    """Dilute Lifshitz energy per area of two half-spaces a gap ``d`` apart."""
    _require(d > 0, f"gap must be positive: d={d}")
    return -n / (3.0 * d**3)


def energy_coaxial(a: float, b: float, n: float) -> float:
    """Dielectric rod of radius ``a`` centred in a cylindrical cavity of radius ``b``."""
    _require(0 < a < b, f"need 0 < a < b, got a={a}, b={b}")
    c = (b - a) * (b + a)
    return -16.0 * math.pi * n / 3.0 * (a * a * b * b) / (c * c * c)


def energy_eccentric(a: float, b: float, offset: float, n: float) -> float:
    """Rod of radius ``a`` inside a cavity of radius ``b``, axes displaced by ``offset``.

    Written with the denominator factored as
    ``((b-a)^2 - R^2)((b+a)^2 - R^2)`` so that the near-contact cancellation
    is done exactly; at ``offset == 0`` the arithmetic collapses onto
    :func:`energy_coaxial` bit for bit.
    """
    _require(0 < a < b, f"need 0 < a < b, got a={a}, b={b}")
    _require(offset >= 0, "offset must be >= 0")
    _require(offset + a < b, f"rod touches cavity wall: offset+a={offset + a} >= b={b}")
    R2 = offset * offset
    c = (b - a) * (b + a)
    inner = (b - a - offset) * (b - a + offset)
    outer = (b + a - offset) * (b + a + offset)
    root = math.sqrt(inner) * math.sqrt(outer)
    num = c * c + (a * a + b * b) * R2 - 2.0 * R2 * R2
    return -16.0 * math.pi * n / 3.0 * (a * a * b * b) * (num / (root * root)) / (root * root * root)


def _eccentric_shape(alpha: float, rho: float):
    """Numerator, denominator and their rho-derivatives in ``alpha=a^2/b^2``, ``rho=R^2/b^2``."""
    p = (1.0 - alpha) ** 2 + (1.0 + alpha) * rho - 2.0 * rho * rho
    dp = (1.0 + alpha) - 4.0 * rho
    d = (1.0 - math.sqrt(alpha)) ** 2 - rho
    d *= (1.0 + math.sqrt(alpha)) ** 2 - rho
    dd = 2.0 * rho - 2.0 * (1.0 + alpha)
    return p, dp, d, dd


def force_eccentric(a: float, b: float, offset: float, n: float) -> float:
    """Force per length ``-dE/d(offset)`` on the inner rod; positive pushes it off-centre."""
    _require(0 < a < b, f"need 0 < a < b, got a={a}, b={b}")
    _require(offset >= 0, "offset must be >= 0")
    _require(offset + a < b, f"rod touches cavity wall: offset+a={offset + a} >= b={b}")
    alpha = (a / b) ** 2
    rho = (offset / b) ** 2
    p, dp, d, dd = _eccentric_shape(alpha, rho)
    dfdrho = (dp * d - 2.5 * p * dd) / d**3.5
    prefactor = -16.0 * math.pi * n / 3.0 * a * a / b**4
    return -prefactor * dfdrho * 2.0 * offset / (b * b)


def continue_cyl_cyl_to_contained(a: float, b: float, r_axes: float, n: float) -> float:
    """Two-cylinder energy analytically continued to one cylinder inside the other.

    For ``r_axes > a + b`` this is the ordinary external energy.  For
    ``r_axes + a < b`` the 5/2-power is taken of the explicitly positive
    product ``((a+b)^2 - R^2)((b-a)^2 - R^2)`` and the overall sign is chosen
    so that the energy is negative.  The band in between is rejected.
    """
    _require(a > 0 and b > 0, "radii must be positive")
    _require(r_axes >= 0, "axis separation must be >= 0")
    if r_axes > a + b:
        return energy_cyl_cyl(a, b, r_axes, n)
    _require(
        r_axes + a < b,
        f"r_axes={r_axes} lies in the touching/overlap band [b-a, a+b] = [{b - a}, {a + b}]",
    )
    R2 = r_axes * r_axes
    num = R2 * R2 - 0.5 * (a * a + b * b) * R2 - 0.5 * (a * a - b * b) ** 2
    positive = ((a + b) ** 2 - R2) * ((b - a - r_axes) * (b - a + r_axes))
    value = 32.0 * math.pi * n / 3.0 * a * a * b * b * num / positive**2.5
    # num < 0 throughout the contained branch, so value < 0 for n > 0
    return value


def _series_coefficients(k_max: int, m_max: int):
    """``(m+1)^2/2 * C(k+m+1, m+1) * C(k+m+2, m+1)`` by multiplicative recurrence."""
    if k_max + m_max > _BINOMIAL_GUARD:
        raise DomainError(f"series order k+m={k_max + m_max} exceeds guard {_BINOMIAL_GUARD}")
    rows = []
    for m in range(m_max + 1):
        # k = 0: C(m+1, m+1) = 1, C(m+2, m+1) = m+2
        c1, c2 = 1.0, float(m + 2)
        row = []
        for k in range(k_max + 1):
            row.append(0.5 * (m + 1) ** 2 * c1 * c2)
            c1 *= (k + m + 2) / (k + 1)
            c2 *= (k + m + 3) / (k + 2)
        rows.append(row)
    return rows  # rows[m][k]


def eccentric_series(a: float, b: float, offset: float, n: float, n_max: int = 40,
                     m_max: int = 40) -> EnergyResult:
    """Partial sum of the double power series of the eccentric energy in ``a^2/b^2`` and ``R^2/b^2``.

    ``error_estimate`` is the magnitude of the outermost row and column of
    terms, a heuristic for the truncation error, plus a bound on rounding.  A note is attached when
    ``(a + offset)/b`` is close to 1, where convergence is slow.
    """
    _require(0 < a < b, f"need 0 < a < b, got a={a}, b={b}")
    _require(0 <= offset < b, "need 0 <= offset < b")
    _require(n_max >= 0 and m_max >= 0, "truncation orders must be >= 0")
    alpha = (a / b) ** 2
    rho = (offset / b) ** 2
    coeffs = _series_coefficients(n_max, m_max)
    terms = []
    border = 0.0
    rounding = 0.0
    rho_pow = 1.0
    for m in range(m_max + 1):
        alpha_pow = 1.0
        for k in range(n_max + 1):
            term = coeffs[m][k] * alpha_pow * rho_pow
            terms.append(term)
            if k == n_max or m == m_max:
                border += term
            # each power and the coefficient carry about one rounding per factor
            rounding += (k + m + 3) * abs(term)
            alpha_pow *= alpha
        rho_pow *= rho
    total = math.fsum(terms)
    error = abs(border) + rounding * _EPS
    prefactor = -16.0 * math.pi * n * a * a / (3.0 * b**4)
    notes = []
    ratio = (a + offset) / b
    if ratio > 0.9:
        msg = f"(a+offset)/b = {ratio:.3f} is near 1; series truncation error may be large"
        notes.append(msg)
        warnings.warn(msg, RuntimeWarning, stacklevel=2)
    if offset + a >= b:
        notes.append("outside the non-overlapping domain; partial sum has no physical limit")
    return EnergyResult(
        value=prefactor * total,
        unit_kind=UnitKind.ENERGY_PER_LENGTH,
        error_estimate=abs(prefactor) * error,
        evaluations_used=(n_max + 1) * (m_max + 1),
        method="series",
        notes=tuple(notes),
    )


_POLES = (1.0, 2.0, 3.0)


@dataclass(frozen=True)
class RegulatorExponent:
    """Exponent replacing the divergent fifth power in the self-energy integrand."""

    beta: float

    def __post_init__(self):
        beta = float(self.beta)
        if beta in _POLES:
            raise DomainError(f"beta={beta:g} is a simple pole of the regulated self-energy")
        object.__setattr__(self, "beta", beta)


def self_energy_regulated(a: float, n_self: float, beta) -> float:
    """Regulated self-energy per length of a single dilute cylinder.

    ``-(16 N/3) a^(2(4-beta)) (5-beta) / ((1-beta)(2-beta)(3-beta))``.
    The physical value is the continuation to ``beta = 5``, which is zero.
    """
    if not isinstance(beta, RegulatorExponent):
        beta = RegulatorExponent(beta)
    _require(a > 0, "radius must be positive")
    bt = beta.beta
    return (-16.0 * n_self / 3.0 * (a * a) ** (4.0 - bt) * (5.0 - bt)
            / ((1.0 - bt) * (2.0 - bt) * (3.0 - bt)))


def self_energy_dilute_cylinder(a: float, n_self: float) -> float:
    """Self-energy per length of a dilute cylinder to order ``(eps - 1)^2``: exactly zero.

    See :func:`self_energy_regulated` for the regulator family that this is
    the ``beta = 5`` member of.
    """
    _require(a > 0, "radius must be positive")
    return 0.0
