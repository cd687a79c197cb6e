"""Oracle suite: closed forms checked against independent numerical routes.

Used by ``casimir-polder verify``.  Each check returns a :class:`CheckResult`
with the measured deviation and the tolerance it was held to.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import closed_forms as cf
from . import kernel
from .cubature import QuadratureConfig
from .errors import NotConvergedError
from .kernel import MaterialPair
from .pairwise import (coaxial_reduced, energy_pair_2d, energy_pair_3d,
                       self_energy_integral_regulated)
from .regions import Ball, Disk, ExteriorDisk, HalfPlane, HalfSpace

PROFILES = ("fast", "thorough")


@dataclass
class CheckResult:
    name: str
    passed: bool
    deviation: float
    tolerance: float
    detail: str = ""
    seconds: float = 0.0

    def as_dict(self):
        return asdict(self)


def _rel(x, ref):
    return abs(x - ref) / abs(ref)


def fd_dyadic(r, r_prime, zeta, h):
    """``(d_i d_j - zeta^2 delta_ij) G0`` by second-order central differences in ``r``."""
    r = np.asarray(r, dtype=float)
    r_prime = np.asarray(r_prime, dtype=float)

    def g(x):
        return kernel.scalar_green(float(np.linalg.norm(x - r_prime)), zeta)

    eye = np.eye(3) * h
    out = np.empty((3, 3))
    g0 = g(r)
    for i in range(3):
        out[i, i] = (g(r + eye[i]) - 2.0 * g0 + g(r - eye[i])) / h**2 - zeta**2 * g0
        for j in range(i + 1, 3):
            mixed = (g(r + eye[i] + eye[j]) - g(r + eye[i] - eye[j])
                     - g(r - eye[i] + eye[j]) + g(r - eye[i] - eye[j])) / (4.0 * h * h)
            out[i, j] = out[j, i] = mixed
    return out


def random_kernel_points(count, seed):
    """Random ``(r, r', zeta)`` with ``0.5 < |r - r'| < 5`` and ``0 <= zeta <= 2``."""
    rng = np.random.default_rng(seed)
    pts = []
    for _ in range(count):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        dist = rng.uniform(0.5, 5.0)
        rp = rng.uniform(-1, 1, size=3)
        pts.append((rp + dist * direction, rp, rng.uniform(0.0, 2.0)))
    return pts


def check_frequency_integral(profile):
    value = kernel.frequency_integral()
    dev = abs(value - 23.0)
    return CheckResult("frequency integral == 23", dev <= 1e-10, dev, 1e-10,
                       f"value={value!r}")


def check_dyadic_oracle(profile):
    count = 100 if profile == "fast" else 1000
    worst_fd = worst_contract = 0.0
    for r, rp, zeta in random_kernel_points(count, seed=11):
        closed = kernel.dyadic_tensor(r, rp, zeta)
        dist = float(np.linalg.norm(r - rp))
        fd = fd_dyadic(r, rp, zeta, 1e-4 * dist)
        worst_fd = max(worst_fd, np.max(np.abs(fd - closed)) / np.max(np.abs(closed)))
        contracted = np.sum(closed * closed) * (4.0 * math.pi * dist**3) ** 2
        worst_contract = max(worst_contract,
                             _rel(contracted, kernel.contraction_polynomial(abs(zeta) * dist)))
    ok = worst_fd < 1e-6 and worst_contract < 1e-10
    return CheckResult("dyadic vs finite differences / contraction", ok,
                       max(worst_fd, worst_contract * 1e4), 1e-6,
                       f"fd={worst_fd:.2e} (tol 1e-6), contraction={worst_contract:.2e} (tol 1e-10)")


def _cfg(profile, **kw):
    base = dict(rel_tol=2e-4 if profile == "fast" else 5e-5, max_evaluations=20_000_000)
    base.update(kw)
    return QuadratureConfig(**base)


UNIT = MaterialPair.from_coupling(1.0)


def check_sphere_plane(profile):
    exact = cf.energy_sphere_plane(1.0, 2.0, 1.0)
    res = energy_pair_3d(Ball(1.0, (0.0, 0.0, 2.0)), HalfSpace(0.0, -1), UNIT, _cfg(profile))
    dev = _rel(res.value, exact)
    return CheckResult("sphere-plane 6D brute force", dev < 1e-3, dev, 1e-3,
                       f"{res.value:.10g} vs {exact:.10g} ({res.evaluations_used} evals)")


def check_coaxial(profile):
    exact = cf.energy_coaxial(1.0, 2.0, 1.0)
    brute = energy_pair_2d(Disk(1.0), ExteriorDisk(2.0), UNIT, _cfg(profile))
    reduced = coaxial_reduced(1.0, 2.0, 1.0)
    d4, d2 = _rel(brute.value, exact), _rel(reduced.value, exact)
    return CheckResult("coaxial 4D / reduced 2D", d4 < 1e-3 and d2 < 1e-6, d4, 1e-3,
                       f"4D dev={d4:.2e} (tol 1e-3), reduced dev={d2:.2e} (tol 1e-6)")


def check_eccentric(profile):
    exact = cf.energy_eccentric(0.5, 2.0, 0.5, 1.0)
    brute = energy_pair_2d(Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0), UNIT, _cfg(profile))
    series = cf.eccentric_series(0.3, 1.0, 0.2, 1.0, 40, 40)
    d4 = _rel(brute.value, exact)
    ds = _rel(series.value, cf.energy_eccentric(0.3, 1.0, 0.2, 1.0))
    return CheckResult("eccentric 4D / 40x40 series", d4 < 1e-3 and ds < 1e-8, d4, 1e-3,
                       f"4D dev={d4:.2e} (tol 1e-3), series dev={ds:.2e} (tol 1e-8)")


def random_contained(count, seed):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        b = rng.uniform(0.5, 5.0)
        a = rng.uniform(0.05, 0.95) * b
        offset = rng.uniform(0.0, 0.999) * (b - a)
        out.append((a, b, offset))
    return out


def check_continuation(profile):
    count = 100 if profile == "fast" else 2000
    worst = 0.0
    for a, b, off in random_contained(count, seed=5):
        worst = max(worst, _rel(cf.continue_cyl_cyl_to_contained(a, b, off, 1.0),
                                cf.energy_eccentric(a, b, off, 1.0)))
    return CheckResult("continuation == eccentric", worst < 1e-12, worst, 1e-12,
                       f"{count} random contained configurations")


def check_limits(profile):
    d1 = _rel(cf.energy_cyl_cyl(1.0, 1e4, 1e4 + 2.0, 1.0), cf.energy_cyl_plane(1.0, 2.0, 1.0))
    b = 1e3
    d2 = _rel(cf.energy_coaxial(b - 1.0, b, 1.0) / (2 * math.pi * b), cf.energy_plates_dilute(1.0, 1.0))
    worst_ulp = 0.0
    rng = np.random.default_rng(3)
    for _ in range(100):
        bb = rng.uniform(0.5, 5.0)
        aa = rng.uniform(0.05, 0.95) * bb
        e0, ec = cf.energy_eccentric(aa, bb, 0.0, 1.0), cf.energy_coaxial(aa, bb, 1.0)
        worst_ulp = max(worst_ulp, abs(e0 - ec) / math.ulp(ec))
    ok = d1 < 1e-3 and d2 < 5e-3 and worst_ulp < 4
    return CheckResult("limits (cyl-plane, Lifshitz, offset 0)", ok, max(d1, d2), 1e-3,
                       f"cyl-plane dev={d1:.2e}, Lifshitz dev={d2:.2e} (tol 5e-3), "
                       f"offset-0 ulps={worst_ulp:g} (tol 4)")


def check_force(profile):
    a, b = 0.5, 2.0
    worst = 0.0
    positive = True
    for frac in np.linspace(0.05, 0.7 * (1 - a / b), 10):
        off = frac * b
        h = 1e-6 * b
        fd = -(cf.energy_eccentric(a, b, off + h, 1.0) - cf.energy_eccentric(a, b, off - h, 1.0)) / (2 * h)
        f = cf.force_eccentric(a, b, off, 1.0)
        positive &= f > 0
        worst = max(worst, _rel(f, fd))
    zero = cf.force_eccentric(a, b, 0.0, 1.0) == 0.0
    ok = worst < 1e-6 and zero and positive
    return CheckResult("eccentric force", ok, worst, 1e-6,
                       f"force(0)==0: {zero}, positive on grid: {positive}")


def check_self_energy(profile):
    at5 = cf.self_energy_regulated(1.0, 1.0, 5.0)
    worst = 0.0
    for beta in (0.0, 0.5):
        num = self_energy_integral_regulated(1.0, 1.0, beta)
        worst = max(worst, _rel(num.value, cf.self_energy_regulated(1.0, 1.0, beta)))
    ok = at5 == 0.0 and worst < 1e-8
    return CheckResult("self-energy regulator", ok, worst, 1e-8, f"beta=5 value={at5!r}")


def oracle_suite(profile):
    """(label, closed-form value, callable returning EnergyResult) for error-honesty checks."""
    cfg = _cfg(profile)
    runs = []
    for off in (0.0, 0.25, 0.5, 0.75, 1.0):
        runs.append((f"eccentric off={off}", cf.energy_eccentric(0.5, 2.0, off, 1.0),
                     lambda off=off: energy_pair_2d(Disk(0.5, (off, 0.0)), ExteriorDisk(2.0), UNIT, cfg)))
    for a in (0.5, 1.0, 1.5):
        runs.append((f"coaxial a={a}", cf.energy_coaxial(a, 2.0, 1.0),
                     lambda a=a: energy_pair_2d(Disk(a), ExteriorDisk(2.0), UNIT, cfg)))
    for z in (1.5, 2.0, 4.0):
        runs.append((f"cyl-plane z={z}", cf.energy_cyl_plane(1.0, z, 1.0),
                     lambda z=z: energy_pair_2d(Disk(1.0, (z, 0.0)), HalfPlane(0.0, -1), UNIT, cfg)))
    for r in (2.5, 3.0, 5.0):
        runs.append((f"cyl-cyl R={r}", cf.energy_cyl_cyl(1.0, 1.0, r, 1.0),
                     lambda r=r: energy_pair_2d(Disk(1.0), Disk(1.0, (r, 0.0)), UNIT, cfg)))
    for seed in range(4):
        qcfg = QuadratureConfig(rel_tol=1e-3, method="qmc", seed=seed, max_evaluations=20_000_000)
        runs.append((f"eccentric qmc seed={seed}", cf.energy_eccentric(0.5, 2.0, 0.5, 1.0),
                     lambda qcfg=qcfg: energy_pair_2d(Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0), UNIT, qcfg)))
    runs.append(("sphere-plane z=2", cf.energy_sphere_plane(1.0, 2.0, 1.0),
                 lambda: energy_pair_3d(Ball(1.0, (0.0, 0.0, 2.0)), HalfSpace(0.0, -1), UNIT, cfg)))
    return runs


def check_determinism_and_honesty(profile):
    cfg = _cfg(profile)
    args = (Disk(0.5, (0.5, 0.0)), ExteriorDisk(2.0), UNIT)
    same = energy_pair_2d(*args, cfg) == energy_pair_2d(*args, cfg)
    qcfg = QuadratureConfig(rel_tol=1e-3, method="qmc", seed=7)
    same &= energy_pair_2d(*args, qcfg) == energy_pair_2d(*args, qcfg)
    honest = total = 0
    for _, exact, run in oracle_suite(profile):
        try:
            res = run()
        except NotConvergedError as exc:
            res = exc.result
        total += 1
        honest += abs(res.value - exact) <= 3.0 * res.error_estimate
    frac = honest / total
    ok = same and frac >= 0.95
    return CheckResult("determinism / error honesty", ok, 1.0 - frac, 0.05,
                       f"bit-identical reruns: {same}, honest {honest}/{total}")


CHECKS = (check_frequency_integral, check_dyadic_oracle, check_sphere_plane, check_coaxial,
          check_eccentric, check_continuation, check_limits, check_force, check_self_energy,
          check_determinism_and_honesty)


def run_checks(profile="fast"):
    if profile not in PROFILES:
        raise ValueError(f"profile must be one of {PROFILES}")
    results = []
    for check in CHECKS:
        t0 = time.perf_counter()
        try:
            res = check(profile)
        except Exception as exc:  # a crashing check is a failed check
            res = CheckResult(check.__name__, False, math.inf, 0.0, f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
