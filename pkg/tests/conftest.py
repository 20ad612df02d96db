import sys

import numpy as np
import pytest

from liepoisson.models import RigidBody, rigid_body_system

INERTIA = (1.0, 2.0, 3.0)
MU0 = np.array([1.0, 0.5, -0.3])


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture
def body():
    return RigidBody(INERTIA)


@pytest.fixture
def rigid(body):
    return rigid_body_system(body)


@pytest.fixture
def mu0():
    return MU0.copy()


def expm_series(A, terms=30):
    """Scaling-and-squaring truncated Taylor exponential (independent oracle)."""
    norm = np.linalg.norm(A, 1)
    s = max(0, int(np.ceil(np.log2(norm))) + 1) if norm > 0 else 0
    B = A / 2.0**s
    out = np.eye(A.shape[0])
    term = np.eye(A.shape[0])
    for k in range(1, terms):
        term = term @ B / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


def bernoulli_dexpinv(xi, eta, order=8):
    """sum_{n<=order} B_n / n! ad_xi^n eta with B_1 = -1/2 (independent oracle)."""
    from fractions import Fraction
    from math import comb, factorial

    B = [Fraction(1)]
    for m in range(1, order + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / (m + 1))
    out = np.zeros(3)
    term = np.asarray(eta, dtype=float)
    for n in range(order + 1):
        out = out + float(B[n]) / factorial(n) * term
        term = np.cross(xi, term)
    return out


def steps(step_map, z, h, n):
    s = step_map.lift(np.asarray(z, dtype=float))
    for _ in range(n):
        s = step_map.stepper(s, h)
    return step_map.readout(s)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
