import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from casimir_polder import kernel
from casimir_polder.errors import DomainError
from casimir_polder.kernel import MaterialPair
from casimir_polder.verification import fd_dyadic, random_kernel_points

# frozen with mpmath at 40 digits
G_R1_Z1 = 0.02927491576215958
CONTRACTION_T1 = 4.601399630044832
N_TENTH = 3.641230037146514e-05
N_UNIT = 3.641230037146514e-03


def test_scalar_green_values():
    assert kernel.scalar_green(1.0, 0.0) == pytest.approx(1 / (4 * math.pi), rel=1e-15)
    assert kernel.scalar_green(1.0, 1.0) == pytest.approx(G_R1_Z1, rel=1e-14)
    assert kernel.scalar_green(2.0, 0.5) == pytest.approx(G_R1_Z1 / 2, rel=1e-14)
    # |zeta| convention
    assert kernel.scalar_green(1.0, -1.0) == kernel.scalar_green(1.0, 1.0)


@pytest.mark.parametrize("r", [0.0, -1.0])
def test_scalar_green_rejects_coincident(r):
    with pytest.raises(DomainError):
        kernel.scalar_green(r, 1.0)


def test_dyadic_static_along_x():
    x = np.array([1.0, 0.0, 0.0])
    o = np.zeros(3)
    assert kernel.dyadic_component(x, o, 0.0, 0, 0) == pytest.approx(1 / (2 * math.pi), rel=1e-15)
    assert kernel.dyadic_component(x, o, 0.0, 0, 1) == 0.0
    with pytest.raises(DomainError):
        kernel.dyadic_component(o, o, 1.0, 0, 0)


def test_dyadic_matches_finite_differences():
    for r, rp, zeta in random_kernel_points(100, seed=1):
        closed = kernel.dyadic_tensor(r, rp, zeta)
        fd = fd_dyadic(r, rp, zeta, 1e-4 * np.linalg.norm(r - rp))
        assert np.max(np.abs(fd - closed)) / np.max(np.abs(closed)) < 1e-6


def test_dyadic_is_symmetric_and_traceless_at_zero_frequency():
    for r, rp, _ in random_kernel_points(20, seed=2):
        g = kernel.dyadic_tensor(r, rp, 0.0)
        np.testing.assert_allclose(g, g.T, rtol=0, atol=1e-15)
        # static dipole field: -1*3 + 3 = 0
        assert abs(np.trace(g)) < 1e-13 * np.max(np.abs(g))


def test_contraction_polynomial_values():
    assert kernel.contraction_polynomial(0.0) == 6.0
    assert kernel.contraction_polynomial(1.0) == pytest.approx(CONTRACTION_T1, rel=1e-14)
    with pytest.raises(DomainError):
        kernel.contraction_polynomial(-0.1)


def test_contraction_is_square_of_dyadic():
    for r, rp, zeta in random_kernel_points(100, seed=3):
        g = kernel.dyadic_tensor(r, rp, zeta)
        dist = np.linalg.norm(r - rp)
        lhs = np.sum(g * g) * (4 * math.pi * dist**3) ** 2
        assert lhs == pytest.approx(kernel.contraction_polynomial(abs(zeta) * dist), rel=1e-10)


def test_frequency_integral():
    assert abs(kernel.frequency_integral() - 23.0) < 1e-10
    assert kernel.frequency_integrand(0.0) == 6.0


def test_frequency_tail():
    # the tail beyond u = 50 is ~1.8e-16, far below the 1e-10 target
    tail50 = 1.776133658744077e-16  # mpmath
    assert kernel.frequency_tail_bound(50.0) == pytest.approx(tail50, rel=1e-12)
    direct, _ = integrate.quad(kernel.frequency_integrand, 50.0, 100.0, epsabs=0, epsrel=1e-10)
    assert direct == pytest.approx(tail50, rel=1e-8)
    assert abs(kernel.frequency_integral(50.0) - kernel.frequency_integral(100.0)) < 1e-13


def test_coupling_n():
    assert kernel.coupling_n(0.0, 5.0) == 0.0
    assert kernel.coupling_n(0.1, 0.1) == pytest.approx(N_TENTH, rel=1e-14)
    assert kernel.coupling_n(1.0, 1.0) == pytest.approx(N_UNIT, rel=1e-14)
    with pytest.raises(DomainError):
        kernel.coupling_n(math.nan, 1.0)


def test_material_pair_invariant():
    mat = MaterialPair.from_permittivities(1.3, 1.05)
    assert mat.n == kernel.coupling_n(mat.chi1, mat.chi2)
    assert MaterialPair.from_coupling(2.5).n == pytest.approx(2.5, rel=1e-15)
    with pytest.raises(TypeError):
        MaterialPair(0.1, 0.1, 3.0)


def test_kernel_point():
    p = kernel.KernelPoint(2.0, -0.5)
    assert p.t == 1.0
    with pytest.raises(DomainError):
        kernel.KernelPoint(0.0, 1.0)


def test_pair_kernel_3d():
    assert kernel.pair_kernel_3d(1.0, MaterialPair(0.0, 0.3)) == 0.0
    unit = MaterialPair((4 * math.pi) ** 3 / 23, 1.0)
    assert kernel.pair_kernel_3d(1.0, unit) == pytest.approx(-1.0, rel=1e-15)
    mat = MaterialPair(0.2, 0.4)
    assert kernel.pair_kernel_3d(2.0, mat) == pytest.approx(kernel.pair_kernel_3d(1.0, mat) / 128, rel=1e-15)
    with pytest.raises(DomainError):
        kernel.pair_kernel_3d(0.0, mat)


@settings(max_examples=50, deadline=None)
@given(s=st.floats(0.05, 50.0), lam=st.floats(0.1, 10.0))
def test_pair_kernel_3d_scaling_and_monotone(s, lam):
    mat = MaterialPair(0.1, 0.2)
    v = kernel.pair_kernel_3d(s, mat)
    assert v < 0
    assert kernel.pair_kernel_3d(lam * s, mat) == pytest.approx(v / lam**7, rel=1e-12)
    assert kernel.pair_kernel_3d(s * 1.01, mat) > v


def test_axial_factor():
    val, _ = integrate.quad(lambda z: (1 + z * z) ** -3.5, -np.inf, np.inf, epsabs=0, epsrel=1e-13)
    assert val == pytest.approx(16 / 15, rel=1e-12)
    assert kernel.AXIAL_FACTOR == 16 / 15


@pytest.mark.parametrize("s", np.geomspace(0.1, 10.0, 9))
def test_pair_kernel_2d_is_axial_integral_of_3d(s):
    mat = MaterialPair(0.3, 0.7)
    half, _ = integrate.quad(lambda z: kernel.pair_kernel_3d(math.hypot(s, z), mat), 0, np.inf,
                             epsabs=0, epsrel=1e-12)
    assert 2 * half == pytest.approx(kernel.pair_kernel_2d(s, mat), rel=1e-8)


def test_prefactor_identity_arbitrary_precision():
    mpmath.mp.dps = 50
    pi = mpmath.pi
    lhs = 23 / (4 * pi) ** 3 * mpmath.mpf(16) / 15
    rhs = 32 / (3 * pi) * 23 / (640 * pi**2)
    assert abs(lhs - rhs) < mpmath.mpf(10) ** -45
    mpmath.mp.dps = 15
