"""Collective integrator through the Hopf realization T*R^2 -> so(3)*.

Lifted states are ``z = (q1, q2, p1, p2)``. With the standard canonical
equations the Hopf map below is anti-Poisson for ``dmu/dt = mu x grad H``, so
the lifted system uses the opposite orientation ``dq/dt = -dK/dp,
dp/dt = dK/dq``. Under it, the collective flow of ``K = H o hopf_map``
projects onto the rigid-body flow.
"""
import numpy as np

from ..errors import DomainError
from ..poisson import StepMap
from ..solvers import DEFAULT_SETTINGS, fixed_point

LIFT_STRUCTURE = np.block([[np.zeros((2, 2)), -np.eye(2)], [np.eye(2), np.zeros((2, 2))]])


def hopf_map(z):
    q1, q2, p1, p2 = np.asarray(z, dtype=float)
    return 0.25 * np.array(
        [
            2 * q1 * q2 + 2 * p1 * p2,
            2 * q1 * p2 - 2 * q2 * p1,
            q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2,
        ]
    )


def hopf_jacobian(z):
    q1, q2, p1, p2 = np.asarray(z, dtype=float)
    return 0.5 * np.array(
        [
            [q2, q1, p2, p1],
            [p2, -p1, -q2, q1],
            [q1, -q2, p1, -p2],
        ]
    )


def hopf_section(mu):
    """A lift ``z`` with ``hopf_map(z) == mu``.

    In complex form ``a = q1 + i p1``, ``b = q2 + i p2`` the map reads
    ``mu1 + i mu2 = conj(a) b / 2``, ``mu3 = (|a|^2 - |b|^2) / 4``. For
    ``mu3 >= 0`` take ``a`` real and positive, otherwise ``b``.
    """
    mu = np.asarray(mu, dtype=float)
    r = np.linalg.norm(mu)
    if r == 0:
        raise DomainError("hopf_section: the fiber over 0 is degenerate")
    w = 2.0 * complex(mu[0], mu[1])
    if mu[2] >= 0:
        a = np.sqrt(2.0 * (r + mu[2]))
        b = w / a
    else:
        b = np.sqrt(2.0 * (r - mu[2]))
        a = np.conj(w) / b
    a, b = complex(a), complex(b)
    return np.array([a.real, b.real, a.imag, b.imag])


def collective_step(system, settings=DEFAULT_SETTINGS):
    """Implicit midpoint on the lift with Hamiltonian ``H o hopf_map``; reads out ``hopf_map``."""
    grad_H = system.gradient

    def lifted_field(z):
        return LIFT_STRUCTURE @ (hopf_jacobian(z).T @ grad_H(hopf_map(z)))

    def step(z, h):
        z = np.asarray(z, dtype=float)
        return fixed_point(
            lambda zn: z + h * lifted_field(0.5 * (z + zn)),
            z + h * lifted_field(z),
            settings,
        )

    return StepMap(
        system=system,
        stepper=step,
        name="collective",
        settings=settings,
        lift=hopf_section,
        readout=hopf_map,
    )
