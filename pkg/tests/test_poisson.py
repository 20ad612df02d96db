import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from liepoisson.errors import DomainError
from liepoisson.integrators import midpoint_step
from liepoisson.lie3 import hat
from liepoisson.models import (
    Trajectory,
    casimir,
    casimir_gradient,
    harmonic_oscillator_system,
    reference_flow,
    rigid_body_system,
)
from liepoisson.poisson import (
    PoissonSystem,
    StepMap,
    bracket,
    casimir_residual,
    first_integral_drift,
    hamiltonian_vf,
    jacobi_residual,
    jacobian_fd,
    poisson_defect,
    skew_residual,
    validate,
)

vec3 = arrays(np.float64, 3, elements=st.floats(-10, 10))


def test_vf_equilibrium(rigid):
    np.testing.assert_array_equal(hamiltonian_vf(rigid, [1.0, 0, 0]), np.zeros(3))


def test_vf_worked_value(rigid):
    np.testing.assert_allclose(hamiltonian_vf(rigid, [1.0, 1, 1]), [-1 / 6, 2 / 3, -1 / 2], atol=1e-15)


def test_vf_critical_point_of_H(rigid):
    np.testing.assert_array_equal(hamiltonian_vf(rigid, np.zeros(3)), np.zeros(3))


def test_vf_rejects_nonfinite(rigid):
    with pytest.raises(DomainError):
        hamiltonian_vf(rigid, [np.nan, 0, 0])


@given(vec3)
def test_vf_orthogonal_to_gradient(mu):
    sys = rigid_body_system((1.0, 2.0, 3.0))
    v = hamiltonian_vf(sys, mu)
    assert abs(sys.gradient(mu) @ v) <= 1e-12 * (1 + np.sum(mu * mu)) ** 2


def test_jacobian_identity(rng):
    z = rng.normal(size=4)
    np.testing.assert_allclose(jacobian_fd(lambda y: y, z), np.eye(4), atol=1e-10)


def test_jacobian_linear(rng):
    A = rng.normal(size=(3, 3))
    np.testing.assert_allclose(jacobian_fd(lambda y: A @ y, rng.normal(size=3)), A, atol=1e-9)


def test_jacobian_bad_step():
    with pytest.raises(DomainError):
        jacobian_fd(lambda y: y, np.zeros(2), step=0.0)


def test_jacobian_of_symmetric_top_flow():
    # I = (1, 1, 2): mu(t) = Rz(t mu3 / 2) mu0, so the Jacobian is known in closed form
    sys = rigid_body_system((1.0, 1.0, 2.0))
    mu = np.array([0.3, -0.2, 0.5])
    t = 0.7
    th = t * mu[2] / 2
    c, s = np.cos(th), np.sin(th)
    R = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1.0]])
    dR = np.array([[-s, -c, 0], [c, -s, 0], [0, 0, 0.0]])
    exact = R + np.outer(dR @ mu * (t / 2), [0, 0, 1.0])
    D = jacobian_fd(lambda y: reference_flow(sys, y, t, 1e-12), mu, 1e-5)
    np.testing.assert_allclose(D, exact, atol=1e-8)


def test_defect_identity_map(rigid, rng):
    ident = StepMap(system=rigid, stepper=lambda z, h: z, name="identity")
    assert poisson_defect(ident, rng.normal(size=3), 0.1) <= 1e-9


def test_defect_midpoint_constant_pi():
    osc = harmonic_oscillator_system()
    mp = midpoint_step(osc)
    for h in (0.2, 0.1, 0.05):
        assert poisson_defect(mp, np.array([1.0, 0.3]), h) <= 1e-8


def test_defect_midpoint_rigid_ratio(rigid):
    mp = midpoint_step(rigid)
    mu = np.array([1.0, 0.5, -0.3])
    hs = np.array([0.2, 0.1, 0.05])
    d = np.array([poisson_defect(mp, mu, h) for h in hs])
    slope = np.polyfit(np.log(hs), np.log(d), 1)[0]
    assert abs(slope - 3.0) <= 0.3
    assert np.all((d[:-1] / d[1:] > 6) & (d[:-1] / d[1:] < 10))


def test_drift_constant_function(rng):
    traj = Trajectory(np.arange(5.0), rng.normal(size=(5, 3)))
    assert first_integral_drift(traj, lambda z: 3.0) == 0.0


def test_drift_accepts_pair():
    traj = Trajectory([0.0, 1.0], [[1.0, 0, 0], [0.0, 2.0, 0]])
    assert first_integral_drift(traj, (casimir, casimir_gradient)) == pytest.approx(1.5)


def test_drift_empty_raises():
    with pytest.raises(DomainError):
        first_integral_drift(Trajectory(np.zeros(0), np.zeros((0, 3))), casimir)


def test_structure_at_random_points(rigid, rng):
    osc = harmonic_oscillator_system()
    for _ in range(100):
        mu = rng.normal(size=3) * 2
        assert skew_residual(rigid, mu) <= 1e-12
        assert jacobi_residual(rigid, mu) <= 1e-8
        assert casimir_residual(rigid, mu) <= 1e-10
        assert abs(casimir_gradient(mu) @ hamiltonian_vf(rigid, mu)) <= 1e-10
        z = rng.normal(size=2)
        assert skew_residual(osc, z) <= 1e-12
        assert jacobi_residual(osc, z) <= 1e-8


def test_jacobi_detects_non_poisson():
    # skew but not Poisson: hat(v(z)) with v not linear in a Jacobi-compatible way
    bad = PoissonSystem(3, lambda z: hat(np.array([z[1], 0.0, 0.0]) + np.array([0, 0, 1.0])), lambda z: 0.0, lambda z: z)
    assert jacobi_residual(bad, np.array([0.3, 0.4, 0.5])) > 1e-3


def test_bracket_of_first_integrals(rigid, rng):
    for _ in range(100):
        mu = rng.normal(size=3)
        assert abs(bracket(rigid, rigid.gradient, casimir_gradient, mu)) <= 1e-12


def test_bracket_gives_time_derivative(rigid, rng):
    mu = rng.normal(size=3)
    e1 = lambda z: np.array([1.0, 0, 0])  # noqa: E731
    assert bracket(rigid, e1, rigid.gradient, mu) == pytest.approx(hamiltonian_vf(rigid, mu)[0], abs=1e-15)


def test_validate(rigid, rng):
    validate(rigid, rng.normal(size=(10, 3)))
    bad = PoissonSystem(2, lambda z: np.eye(2), lambda z: 0.0, lambda z: z)
    with pytest.raises(DomainError):
        validate(bad, [np.zeros(2)])
    wrong_casimir = PoissonSystem(3, rigid.bivector, rigid.hamiltonian, rigid.gradient, ((casimir, lambda z: np.ones(3)),))
    with pytest.raises(DomainError):
        validate(wrong_casimir, [np.array([1.0, 0, 0])])
