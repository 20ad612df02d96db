"""Finite-dimensional Poisson systems ``dz/dt = Pi(z) grad H(z)`` and their diagnostics."""
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError

Vector = np.ndarray
ScalarFn = Callable[[Vector], float]
GradFn = Callable[[Vector], Vector]

DEFAULT_FD_STEP = 1e-6


@dataclass(frozen=True)
class PoissonSystem:
    """State dimension, bivector field, Hamiltonian with gradient, and Casimirs.

    ``casimirs`` holds ``(function, gradient)`` pairs.
    """

    dim: int
    bivector: Callable[[Vector], np.ndarray]
    hamiltonian: ScalarFn
    gradient: GradFn
    casimirs: Sequence[Tuple[ScalarFn, GradFn]] = ()
    name: str = "system"


@dataclass(frozen=True)
class StepMap:
    """One-step integrator ``z_{k+1} = step(z_k, h)``.

    ``stepper`` acts on the integrator's internal state. ``lift`` maps a point
    of the system's phase space to that state and ``readout`` maps back; both
    are the identity unless the scheme works on a realization or a group.
    Calling the instance applies ``readout(stepper(lift(z), h))``, the map
    induced on the system's phase space.
    """

    system: PoissonSystem
    stepper: Callable[[Vector, float], Vector]
    name: str
    settings: Optional[object] = None
    lift: Callable[[Vector], Vector] = field(default=lambda z: np.asarray(z, dtype=float))
    readout: Callable[[Vector], Vector] = field(default=lambda s: s)

    def __call__(self, z, h):
        return self.readout(self.stepper(self.lift(z), h))


def hamiltonian_vf(sys, z):
    """``Pi(z) @ grad H(z)``."""
    z = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(z)):
        raise DomainError("hamiltonian_vf: non-finite state")
    return sys.bivector(z) @ sys.gradient(z)


def bracket(sys, grad_f, grad_g, z):
    """Poisson bracket ``grad f(z) . Pi(z) grad g(z)``; ``X_H f = bracket(f, H)``."""
    z = np.asarray(z, dtype=float)
    return float(grad_f(z) @ sys.bivector(z) @ grad_g(z))


def jacobian_fd(f, z, step=DEFAULT_FD_STEP):
    """Central-difference Jacobian of ``f`` at ``z``; entry error is O(step**2)."""
    if not step > 0:
        raise DomainError("jacobian_fd: step must be positive")
    z = np.asarray(z, dtype=float)
    cols = []
    for i in range(z.size):
        e = np.zeros_like(z)
        e[i] = step
        cols.append((np.asarray(f(z + e), dtype=float) - np.asarray(f(z - e), dtype=float)) / (2 * step))
    return np.stack(cols, axis=-1)


def poisson_defect(step_map, z, h, fd_step=DEFAULT_FD_STEP):
    """Frobenius norm of ``D phi Pi(z) D phi^T - Pi(phi(z))`` for ``phi = step_map(., h)``.

    Zero up to finite-difference error exactly when the map is Poisson at ``z``.
    """
    z = np.asarray(z, dtype=float)
    Pi = step_map.system.bivector
    D = jacobian_fd(lambda y: step_map(y, h), z, fd_step)
    return float(np.linalg.norm(D @ Pi(z) @ D.T - Pi(step_map(z, h))))


def first_integral_drift(traj, f):
    """``max_k |f(z_k) - f(z_0)|`` along a trajectory.

    ``f`` is a callable or a ``(function, gradient)`` pair.
    """
    if isinstance(f, tuple):
        f = f[0]
    states = np.asarray(traj.states, dtype=float)
    if len(states) == 0:
        raise DomainError("first_integral_drift: empty trajectory")
    values = np.array([f(z) for z in states])
    return float(np.max(np.abs(values - values[0])))


def skew_residual(sys, z):
    P = sys.bivector(np.asarray(z, dtype=float))
    return float(np.linalg.norm(P + P.T))


def jacobi_residual(sys, z, fd_step=DEFAULT_FD_STEP):
    """Max-abs cyclic sum ``sum_l dPi^ij/dz^l Pi^lk + cyc.`` with FD derivatives."""
    z = np.asarray(z, dtype=float)
    P = sys.bivector(z)
    # dP[l, i, j] = d Pi^{ij} / d z^l
    dP = np.moveaxis(jacobian_fd(sys.bivector, z, fd_step), -1, 0)
    T = (
        np.einsum("lij,lk->ijk", dP, P)
        + np.einsum("ljk,li->ijk", dP, P)
        + np.einsum("lki,lj->ijk", dP, P)
    )
    return float(np.max(np.abs(T)))


def casimir_residual(sys, z):
    """Largest ``|Pi(z) grad C(z)|`` over the registered Casimirs (0 if none)."""
    z = np.asarray(z, dtype=float)
    P = sys.bivector(z)
    return max((float(np.linalg.norm(P @ grad(z))) for _, grad in sys.casimirs), default=0.0)


def validate(sys, points, skew_tol=1e-12, casimir_tol=1e-10):
    """Check bivector skew-symmetry and Casimir annihilation at sample points."""
    for z in points:
        if skew_residual(sys, z) > skew_tol:
            raise DomainError(f"{sys.name}: bivector is not skew at {z}")
        if casimir_residual(sys, z) > casimir_tol:
            raise DomainError(f"{sys.name}: registered Casimir is not annihilated at {z}")
