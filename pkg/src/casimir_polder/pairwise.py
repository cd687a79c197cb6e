"""Brute-force Casimir-Polder summation over pairs of bodies.

The 3D routine integrates the ``s^-7`` volume kernel over two bodies (6D);
the 2D routine integrates the axially reduced ``s^-6`` kernel over two
cylinder cross-sections (4D) and gives energies per unit length.  Both are
independent of the closed forms and serve as their numerical oracle.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from . import kernel
from .cubature import QuadratureConfig, integrate_cube
from .errors import DomainError, GeometryError, NotConvergedError
from .kernel import MaterialPair
from .regions import min_separation
from .results import EnergyResult, UnitKind

# relative safety margin between bodies, in units of the geometry scale
CONTACT_MARGIN = 1e-9


def _validate_pair(body1, body2):
    if body1.dim != body2.dim:
        raise GeometryError("bodies must have the same dimension")
    if not (body1.bounded or body2.bounded):
        raise GeometryError("at least one body must be bounded; the pair energy is infinite")
    sep = min_separation(body1, body2)
    scale = max(body1.scale, body2.scale, 1.0)
    if sep.overlap or sep.distance <= CONTACT_MARGIN * scale:
        raise GeometryError(
            f"bodies overlap or touch (min separation {sep.distance!r}); energy diverges")
    return sep.distance


def _pair_integrand(body1, body2, kern):
    if not body1.bounded:
        body1, body2 = body2, body1
    anchor = getattr(body1, "center", None)
    d = body1.dim

    def f(u):
        p1, j1 = body1.map_unit(u[:, :d])
        p2, j2 = body2.map_unit(u[:, d:], anchor)
        s = np.sqrt(np.sum((p1 - p2) ** 2, axis=1))
        return kern(s) * j1 * j2

    return f


def _run(f, dim, cfg, unit_kind, label):
    res = integrate_cube(f, dim, cfg)
    out = EnergyResult(res.value, unit_kind, res.error, res.evaluations, f"{label}/{res.method}")
    if not res.converged:
        raise NotConvergedError(
            f"{label}: budget of {cfg.max_evaluations} evaluations exhausted "
            f"(estimate {res.value:.6e} +/- {res.error:.2e})", out)
    return out


def energy_pair_3d(body1, body2, mat: MaterialPair, cfg: QuadratureConfig | None = None
                   ) -> EnergyResult:
    """Total interaction energy of two disjoint 3D bodies by 6D cubature."""
    cfg = cfg or QuadratureConfig()
    _validate_pair(body1, body2)
    if body1.dim != 3:
        raise GeometryError("energy_pair_3d needs 3D regions")
    if mat.product == 0.0:
        return EnergyResult(0.0, UnitKind.ENERGY, 0.0, 0, "exact-zero")
    f = _pair_integrand(body1, body2, lambda s: kernel.pair_kernel_3d(s, mat))
    return _run(f, 6, cfg, UnitKind.ENERGY, "pair3d")


def energy_pair_2d(region1, region2, mat: MaterialPair, cfg: QuadratureConfig | None = None
                   ) -> EnergyResult:
    """Interaction energy per unit length of two parallel cylindrical bodies by 4D cubature."""
    cfg = cfg or QuadratureConfig()
    _validate_pair(region1, region2)
    if region1.dim != 2:
        raise GeometryError("energy_pair_2d needs 2D regions")
    if mat.product == 0.0:
        return EnergyResult(0.0, UnitKind.ENERGY_PER_LENGTH, 0.0, 0, "exact-zero")
    f = _pair_integrand(region1, region2, lambda s: kernel.pair_kernel_2d(s, mat))
    return _run(f, 4, cfg, UnitKind.ENERGY_PER_LENGTH, "pair2d")


def angular_kernel_reduction(rho, rho_prime):
    """``int_0^{2 pi} dtheta (rho^2 + rho'^2 - 2 rho rho' cos theta)^-3``.

    With ``A = rho^2 + rho'^2`` and ``B = 2 rho rho'`` the integral equals
    ``2 pi P_2(A / sqrt(A^2 - B^2)) / (A^2 - B^2)^(3/2)``, which simplifies to
    ``2 pi (x^2 + y^2 + 4 x y) / |y - x|^5`` in ``x = rho^2``, ``y = rho'^2``.
    """
    x = np.asarray(rho, dtype=float) ** 2
    y = np.asarray(rho_prime, dtype=float) ** 2
    if np.any(np.asarray(rho) < 0) or np.any(np.asarray(rho_prime) < 0):
        raise DomainError("radii must be non-negative")
    if np.any(x == y):
        raise DomainError("equal radii: the angular integral is singular")
    out = 2.0 * math.pi * (x * x + y * y + 4.0 * x * y) / np.abs(y - x) ** 5
    return float(out) if np.ndim(out) == 0 else out


def coaxial_reduced(a: float, b: float, n: float, cfg: QuadratureConfig | None = None
                    ) -> EnergyResult:
    """Coaxial rod/cavity energy from the 2D integral left after the angular reduction.

    ``-(32 pi N / 3) int_0^{a^2} dx int_{b^2}^inf dy (x^2 + y^2 + 4xy)/(y - x)^5``,
    done as nested adaptive Gauss-Kronrod quadrature.
    """
    cfg = cfg or QuadratureConfig(rel_tol=1e-10)
    if not 0 < a < b:
        raise DomainError(f"need 0 < a < b, got a={a}, b={b}")
    calls = [0]

    def integrand(y, x):
        calls[0] += 1
        return (x * x + y * y + 4.0 * x * y) / (y - x) ** 5

    value, err = integrate.dblquad(integrand, 0.0, a * a, b * b, math.inf,
                                   epsabs=0.0, epsrel=cfg.rel_tol)
    pref = -32.0 * math.pi * n / 3.0
    out = EnergyResult(pref * value, UnitKind.ENERGY_PER_LENGTH, abs(pref) * err, calls[0],
                       "coaxial-reduced/quadpack")
    if abs(pref) * err > max(cfg.tolerance(pref * value), 1e-300) * 10:
        raise NotConvergedError("coaxial reduced integral did not converge", out)
    return out


def self_energy_integral_regulated(a: float, n_self: float, beta: float,
                                   cfg: QuadratureConfig | None = None) -> EnergyResult:
    """Regulated self-energy double integral, convergent only for ``beta < 1``.

    ``-(16 N/3) int_0^{a^2} dx x^(3-beta) int_0^1 du (u^(2-beta) - 6 u^(1-beta) + 6 u^-beta)``.
    The integrand factorizes, so the double integral is the product of two
    one-dimensional quadratures; the ``u^-beta`` end-point singularity is
    handled by an algebraic weight.
    """
    cfg = cfg or QuadratureConfig(rel_tol=1e-12)
    beta = float(beta)
    if not beta < 1.0:
        raise DomainError(f"beta={beta} >= 1: the integral diverges; use the closed form")
    if not a > 0:
        raise DomainError("radius must be positive")
    tol = dict(epsabs=0.0, epsrel=min(cfg.rel_tol, 1e-10), limit=200)
    ix, ex, info_x = integrate.quad(lambda x: x ** (3.0 - beta), 0.0, a * a,
                                    full_output=1, **tol)[:3]
    # weight u^(-beta) carries the singular factor
    iu, eu, info_u = integrate.quad(lambda u: u * u - 6.0 * u + 6.0, 0.0, 1.0,
                                    weight="alg", wvar=(-beta, 0.0), full_output=1, **tol)[:3]
    pref = -16.0 * n_self / 3.0
    value = pref * ix * iu
    error = abs(pref) * (abs(ix) * eu + abs(iu) * ex)
    return EnergyResult(value, UnitKind.ENERGY_PER_LENGTH, error,
                        info_x["neval"] + info_u["neval"], "self-energy/quadpack")
