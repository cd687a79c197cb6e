import math

import numpy as np
import pytest

from casimir_polder.cubature import GenzMalikRule, QuadratureConfig, integrate_cube


@pytest.mark.parametrize("dim", [2, 3, 4, 6])
def test_genz_malik_exact_for_degree_seven(dim):
    rule = GenzMalikRule(dim)
    assert rule.w7.sum() == pytest.approx(1.0, abs=1e-14)
    assert rule.w5.sum() == pytest.approx(1.0, abs=1e-14)
    rng = np.random.default_rng(dim)
    powers = rng.integers(0, 3, size=dim) * 2
    powers[0] += 1 if powers.sum() <= 6 else 0
    f = lambda x: np.prod(x**powers, axis=1)
    exact = np.prod([(1 - (-1) ** (p + 1)) / (p + 1) for p in powers])
    val, err, _ = rule.apply(lambda x: f(x), np.zeros((1, dim)), np.ones((1, dim)))
    if powers.sum() <= 7:
        assert val[0] == pytest.approx(exact, abs=1e-12)


def gauss(x):
    return np.exp(-np.sum(x * x, axis=1))


GAUSS_1D = math.sqrt(math.pi) / 2 * math.erf(1)


@pytest.mark.parametrize("method", ["adaptive", "qmc", "mc"])
def test_methods_reach_tolerance(method):
    cfg = QuadratureConfig(rel_tol=1e-3, method=method, max_evaluations=4_000_000, seed=3)
    res = integrate_cube(gauss, 4, cfg)
    assert res.converged
    assert abs(res.value - GAUSS_1D**4) <= 3 * res.error


@pytest.mark.parametrize("method", ["adaptive", "qmc", "mc"])
def test_deterministic(method):
    cfg = QuadratureConfig(rel_tol=1e-4, method=method, seed=11, max_evaluations=200_000)
    assert integrate_cube(gauss, 3, cfg) == integrate_cube(gauss, 3, cfg)


def test_seed_changes_stochastic_result():
    a = integrate_cube(gauss, 3, QuadratureConfig(rel_tol=1e-3, method="qmc", seed=1))
    b = integrate_cube(gauss, 3, QuadratureConfig(rel_tol=1e-3, method="qmc", seed=2))
    assert a.value != b.value


def peaked(x):
    return 1.0 / (0.01 + np.sum((x - 0.3) ** 2, axis=1)) ** 2


def test_budget_exhaustion_reports_estimate():
    res = integrate_cube(peaked, 4, QuadratureConfig(rel_tol=1e-12, max_evaluations=5_000))
    assert not res.converged
    assert res.evaluations <= 5_000
    assert res.error > 0


def test_refinement_monotone_in_budget():
    errors = []
    for budget in (2_000, 4_000, 8_000, 16_000, 32_000, 64_000, 128_000):
        res = integrate_cube(peaked, 4, QuadratureConfig(rel_tol=1e-12, max_evaluations=budget))
        errors.append(res.error)
    assert all(errors[i + 1] <= errors[i] for i in range(len(errors) - 1))


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0, abs_tol=0)
    with pytest.raises(ValueError):
        QuadratureConfig(max_evaluations=10)
    with pytest.raises(ValueError):
        QuadratureConfig(method="simpson")
    assert QuadratureConfig(rel_tol=0, abs_tol=1e-3).tolerance(5.0) == 1e-3
