import math

import numpy as np
import pytest
from scipy import integrate

from casimir_polder import closed_forms as cf
from casimir_polder import kernel
from casimir_polder.cubature import QuadratureConfig
from casimir_polder.errors import DomainError, GeometryError, NotConvergedError
from casimir_polder.kernel import MaterialPair
from casimir_polder.pairwise import (angular_kernel_reduction, coaxial_reduced, energy_pair_2d,
                                     energy_pair_3d, self_energy_integral_regulated)
from casimir_polder.regions import Ball, CylinderSegment, Disk, ExteriorDisk, HalfPlane, HalfSpace
from casimir_polder.results import UnitKind

UNIT = MaterialPair.from_coupling(1.0)
CFG = QuadratureConfig(rel_tol=2e-4)


def _rel(x, ref):
    return abs(x - ref) / abs(ref)


@pytest.mark.parametrize("bodies,exact", [
    ((Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0)), cf.energy_eccentric(0.5, 2.0, 0.5, 1.0)),
    ((Disk(1.0), ExteriorDisk(2.0)), cf.energy_coaxial(1.0, 2.0, 1.0)),
    ((Disk(1.0, (2.0, 0.0)), HalfPlane(0.0, -1)), cf.energy_cyl_plane(1.0, 2.0, 1.0)),
    ((Disk(1.0), Disk(0.5, (2.0, 0.0))), cf.energy_cyl_cyl(1.0, 0.5, 2.0, 1.0)),
    ((HalfPlane(0.0, -1), Disk(1.0, (3.0, 0.0))), cf.energy_cyl_plane(1.0, 3.0, 1.0)),
])
def test_2d_brute_force_matches_closed_forms(bodies, exact):
    res = energy_pair_2d(*bodies, UNIT, CFG)
    assert res.unit_kind is UnitKind.ENERGY_PER_LENGTH
    assert _rel(res.value, exact) < 1e-3
    assert abs(res.value - exact) <= 3 * res.error_estimate


def test_sphere_plane_brute_force():
    exact = cf.energy_sphere_plane(1.0, 2.0, 1.0)
    res = energy_pair_3d(Ball(1.0, (0, 0, 2.0)), HalfSpace(0.0, -1), UNIT)
    assert exact == pytest.approx(-4 * math.pi / 27, rel=1e-15)
    assert _rel(res.value, exact) < 1e-3


def test_material_scaling_is_linear():
    mat = MaterialPair.from_permittivities(1.2, 1.1)
    one = energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), UNIT, CFG)
    res = energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), mat, CFG)
    assert res.value == pytest.approx(one.value * mat.n, rel=1e-12)


def test_zero_susceptibility_is_exact_zero():
    mat = MaterialPair(0.0, 0.5)
    assert energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), mat).value == 0.0
    res = energy_pair_3d(Ball(1.0), Ball(1.0, (3.0, 0, 0)), mat)
    assert res.value == 0.0 and res.error_estimate == 0.0


def test_far_balls_point_limit():
    # ball average of f is f + (a^2/10) lap f + O(a^4); lap r^-7 = 42 r^-9
    d = 20.0
    res = energy_pair_3d(Ball(1.0), Ball(1.0, (d, 0, 0)), UNIT, QuadratureConfig(rel_tol=1e-4))
    vol = 4 * math.pi / 3
    point = vol * vol * kernel.pair_kernel_3d(d, UNIT)
    assert res.value / point == pytest.approx(1 + 8.4 / d**2, rel=1e-3)


def test_geometry_errors():
    with pytest.raises(GeometryError):
        energy_pair_2d(Disk(1.0), Disk(1.0, (1.5, 0)), UNIT)
    with pytest.raises(GeometryError):
        energy_pair_2d(HalfPlane(0.0, -1), ExteriorDisk(1.0, (5, 0)), UNIT)
    with pytest.raises(GeometryError):
        energy_pair_3d(Disk(1.0), Disk(1.0, (3, 0)), UNIT)
    with pytest.raises(GeometryError):
        energy_pair_2d(Disk(1.0, (1.0, 0)), ExteriorDisk(2.0), UNIT)


def test_not_converged_carries_result():
    with pytest.raises(NotConvergedError) as info:
        energy_pair_2d(Disk(1.0, (0.9, 0)), ExteriorDisk(2.0), UNIT,
                       QuadratureConfig(rel_tol=1e-9, max_evaluations=2_000))
    res = info.value.result
    assert res.evaluations_used <= 2_000 and res.error_estimate > 0


def test_brute_force_deterministic():
    args = (Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0), UNIT)
    assert energy_pair_2d(*args, CFG) == energy_pair_2d(*args, CFG)
    q = QuadratureConfig(rel_tol=1e-3, method="qmc", seed=5)
    assert energy_pair_2d(*args, q) == energy_pair_2d(*args, q)


def test_finite_segment_approaches_per_length_energy():
    # end effects shrink as the segments grow, so E_3D / (L E_2D) rises towards 1
    a, b, r = 1.0, 1.0, 2.5
    e2d = cf.energy_cyl_cyl(a, b, r, 1.0)
    ratios = []
    for length in (2.0, 4.0, 8.0):
        res = energy_pair_3d(CylinderSegment(a, length), CylinderSegment(b, length, (r, 0, 0)),
                             UNIT, QuadratureConfig(rel_tol=1e-2))
        ratios.append(res.value / (length * e2d))
    assert 0 < ratios[0] < ratios[1] < ratios[2] < 1
    assert ratios[2] > 0.9


def test_angular_reduction():
    r = 1.7
    assert angular_kernel_reduction(0.0, r) == pytest.approx(2 * math.pi / r**6, rel=1e-15)
    assert angular_kernel_reduction(0.4, 1.3) == angular_kernel_reduction(1.3, 0.4)
    for rho, rp in [(0.3, 1.0), (1.0, 2.5), (2.0, 0.5), (0.99, 1.0)]:
        num, _ = integrate.quad(lambda t: (rho**2 + rp**2 - 2 * rho * rp * math.cos(t)) ** -3,
                                0, 2 * math.pi, epsabs=0, epsrel=1e-13, limit=200)
        assert angular_kernel_reduction(rho, rp) == pytest.approx(num, rel=1e-10)
    np.testing.assert_allclose(angular_kernel_reduction(np.array([0.1, 0.2]), 1.0),
                               [angular_kernel_reduction(0.1, 1.0), angular_kernel_reduction(0.2, 1.0)])
    with pytest.raises(DomainError):
        angular_kernel_reduction(1.0, 1.0)
    with pytest.raises(DomainError):
        angular_kernel_reduction(-1.0, 2.0)


def test_coaxial_reduced():
    res = coaxial_reduced(1.0, 2.0, 1.0)
    assert _rel(res.value, -64 * math.pi / 81) < 1e-6
    for a, b in [(0.3, 1.0), (1.9, 2.0), (2.0, 7.0)]:
        assert _rel(coaxial_reduced(a, b, 1.0).value, cf.energy_coaxial(a, b, 1.0)) < 1e-6
    # inner y-integral at x = 0 is int y^-3 = 1 / (2 b^4)
    inner, _ = integrate.quad(lambda y: y**2 / y**5, 4.0, math.inf)
    assert inner == pytest.approx(1 / (2 * 2.0**4), rel=1e-10)
    with pytest.raises(DomainError):
        coaxial_reduced(2.0, 1.0, 1.0)


def test_self_energy_integral():
    assert self_energy_integral_regulated(1.0, 1.0, 0.0).value == pytest.approx(-40 / 9, rel=1e-10)
    assert self_energy_integral_regulated(1.0, 1.0, 0.5).value == pytest.approx(-12.8, rel=1e-10)
    for beta in (-1.0, 0.0, 0.3, 0.5, 0.9):
        num = self_energy_integral_regulated(1.3, 2.0, beta).value
        assert _rel(num, cf.self_energy_regulated(1.3, 2.0, beta)) < 1e-8
    u, _ = integrate.quad(lambda u: u * u - 6 * u + 6, 0, 1)
    assert u == pytest.approx(10 / 3, rel=1e-14)
    for beta in (1.0, 5.0):
        with pytest.raises(DomainError):
            self_energy_integral_regulated(1.0, 1.0, beta)
