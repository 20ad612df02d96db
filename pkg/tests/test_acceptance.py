"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest, which
prints the same lines in its terminal summary.
"""
import sys
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from liepoisson.harness import StudyConfig, convergence_order, defect_study, run_trajectory  # noqa: E402
from liepoisson.integrators import DiscreteRigidBody, make_integrator  # noqa: E402
from liepoisson.lie3 import Ad_star, dexpinv, exp_so3, hat, vee  # noqa: E402
from liepoisson.models import RigidBody, rigid_body_system  # noqa: E402
from liepoisson.poisson import hamiltonian_vf, poisson_defect  # noqa: E402

INERTIA = (1.0, 2.0, 3.0)
MU0 = np.array([1.0, 0.5, -0.3])
SWEEP = (0.2, 0.1, 0.05, 0.025)

RESULTS = {}


def _record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({detail})"
    RESULTS[number] = line
    print(line)
    return ok, line


def criterion_1():
    report = defect_study(StudyConfig(integrator="midpoint"), h_list=SWEEP)
    s = report.slope
    return _record(1, "midpoint defect slope 3 +- 0.3", s is not None and abs(s - 3.0) <= 0.3, f"slope {s:.3f}")


def criterion_2():
    report = defect_study(StudyConfig(model="oscillator", integrator="midpoint"), h_list=SWEEP)
    worst = report.summary["defect_max"]
    return _record(2, "midpoint on constant Pi, defect <= 1e-8", worst <= 1e-8, f"max defect {worst:.2e}")


def criterion_3():
    worst = {}
    for name in ("dlp", "dep-rigid", "retraction-h", "retraction-l"):
        _, report = run_trajectory(StudyConfig(integrator=name, h=0.05, steps=10_000))
        worst[name] = report.summary["orbit_err_max"]
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    return _record(3, "orbit error <= 1e-12 over 1e4 steps", max(worst.values()) <= 1e-12, detail)


def criterion_4():
    drift = {}
    for name in ("dgrad-mean", "dgrad-mid"):
        _, report = run_trajectory(StudyConfig(integrator=name, h=0.1, steps=1000))
        drift[name] = report.summary["h_drift_max"]
    detail = ", ".join(f"{k} {v:.1e}" for k, v in drift.items())
    return _record(4, "discrete-gradient H drift <= 1e-10", max(drift.values()) <= 1e-10, detail)


def criterion_5():
    _, report = run_trajectory(StudyConfig(integrator="collective", h=0.05, steps=1000))
    orbit = report.summary["orbit_err_max"]
    system = rigid_body_system(INERTIA)
    defect = poisson_defect(make_integrator("collective", system, RigidBody(INERTIA)), MU0, 0.05)
    ok = orbit <= 1e-10 and defect <= 1e-7
    return _record(5, "collective |mu| drift <= 1e-10 and defect <= 1e-7", ok, f"drift {orbit:.1e}, defect {defect:.1e}")


def criterion_6():
    system, body = rigid_body_system(INERTIA), RigidBody(INERTIA)
    defects = {n: poisson_defect(make_integrator(n, system, body), MU0, 0.05) for n in ("hj1", "hj2")}
    slopes = {n: convergence_order(StudyConfig(integrator=n)).slope for n in ("hj1", "hj2")}
    ok = max(defects.values()) <= 1e-7 and slopes["hj1"] >= 0.8 and slopes["hj2"] >= 1.7
    detail = ", ".join(f"{n} defect {defects[n]:.1e} slope {slopes[n]:.2f}" for n in defects)
    return _record(6, "generating functions: defect <= 1e-7, slopes >= 0.8 / 1.7", ok, detail)


def criterion_7():
    euler = convergence_order(StudyConfig(integrator="euler", ref_tol=1e-12)).slope
    mid = convergence_order(StudyConfig(integrator="midpoint", ref_tol=1e-12)).slope
    ok = abs(euler - 1.0) <= 0.2 and abs(mid - 2.0) <= 0.2
    return _record(7, "Euler slope 1 +- 0.2, midpoint slope 2 +- 0.2", ok, f"euler {euler:.3f}, midpoint {mid:.3f}")


def criterion_8():
    rng = np.random.default_rng(8)
    I1, I2, I3 = INERTIA
    system = rigid_body_system(INERTIA)
    err, cas = 0.0, 0.0
    for mu in rng.normal(size=(100, 3)):
        x, y, z = mu
        v = hamiltonian_vf(system, mu)
        err = max(err, abs(v[0] - (I2 - I3) / (I2 * I3) * y * z), abs(v[2] - (I1 - I2) / (I1 * I2) * x * y))
        (_, grad), = system.casimirs
        cas = max(cas, np.linalg.norm(system.bivector(mu) @ grad(mu)))
    ok = err <= 1e-14 and cas <= 1e-10
    return _record(8, "vector-field components to 1e-14, Casimir <= 1e-10", ok, f"component err {err:.1e}, Casimir {cas:.1e}")


def _bernoulli_dexpinv(xi, eta, order=10):
    B = [Fraction(1)]
    for m in range(1, order + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    out, term = np.zeros_like(eta), eta
    for n in range(order + 1):
        out = out + float(B[n]) / factorial(n) * term
        term = np.cross(xi, term)
    return out


def criterion_9(n=100_000):
    rng = np.random.default_rng(9)
    v = rng.normal(size=(n, 3)) * 3
    failures = {}
    failures["hat/vee"] = int(np.sum(np.any(vee(hat(v)) != v, axis=1)))
    R = exp_so3(v)
    orth = np.linalg.norm(np.swapaxes(R, 1, 2) @ R - np.eye(3), axis=(1, 2))
    failures["exp orthogonality"] = int(np.sum(orth > 1e-12))
    inv = np.linalg.norm(R @ exp_so3(-v) - np.eye(3), axis=(1, 2))
    failures["tau(xi) tau(-xi)"] = int(np.sum(inv > 1e-12))
    mu = rng.normal(size=(n, 3))
    iso = np.abs(np.linalg.norm(Ad_star(R, mu), axis=1) - np.linalg.norm(mu, axis=1))
    failures["Ad* isometry"] = int(np.sum(iso > 1e-12 * (1 + np.linalg.norm(mu, axis=1))))
    xi = v / np.linalg.norm(v, axis=1, keepdims=True) * rng.uniform(0, 0.5, size=(n, 1))
    eta = rng.normal(size=(n, 3))
    dex = np.linalg.norm(dexpinv(xi, eta) - _bernoulli_dexpinv(xi, eta), axis=1)
    failures["dexpinv vs Bernoulli"] = int(np.sum(dex > 1e-9))
    total = sum(failures.values())
    detail = f"{5 * n} checks, {total} failures"
    if total:
        detail += ": " + ", ".join(f"{k} {c}" for k, c in failures.items() if c)
    return _record(9, "randomized kernel invariants", total == 0, detail)


def criterion_10(h=0.05, steps=2000):
    drb = DiscreteRigidBody(RigidBody(INERTIA))
    gs = drb.group_trajectory(MU0, h, steps)
    worst = 0.0
    for g_k, g_next in zip(gs[:-1], gs[1:]):
        M_k, M_next = drb.momentum_matrix(g_k), drb.momentum_matrix(g_next)
        worst = max(worst, np.linalg.norm(M_next - g_k.T @ M_k @ g_k))
    return _record(10, "discrete EP read-out obeys M_{k+1} = g_k^T M_k g_k", worst <= 1e-10, f"max residual {worst:.1e} over {steps} steps")


def _guarded(number, check):
    def run():
        try:
            return check()
        except Exception as exc:  # report the crash as a failed criterion
            return _record(number, check.__name__, False, f"{type(exc).__name__}: {exc}")

    return run


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]
CRITERIA = [_guarded(i, c) for i, c in enumerate(CRITERIA, start=1)]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(check):
    ok, line = check()
    assert ok, line


if __name__ == "__main__":
    outcomes = [check()[0] for check in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
