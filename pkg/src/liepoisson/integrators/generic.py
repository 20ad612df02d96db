"""Step maps valid for any Poisson system: implicit midpoint, explicit Euler, exact flow."""
import numpy as np

from ..models import reference_flow
from ..poisson import StepMap, hamiltonian_vf
from ..solvers import DEFAULT_SETTINGS, fixed_point


def midpoint_step(sys, settings=DEFAULT_SETTINGS):
    """Implicit midpoint rule ``(z' - z)/h = Pi(m) grad H(m)``, ``m = (z + z')/2``.

    Solved by fixed-point iteration from an explicit-Euler predictor.
    """

    def step(z, h):
        z = np.asarray(z, dtype=float)

        def g(zn):
            m = 0.5 * (z + zn)
            return z + h * (sys.bivector(m) @ sys.gradient(m))

        return fixed_point(g, z + h * hamiltonian_vf(sys, z), settings)

    return StepMap(system=sys, stepper=step, name="midpoint", settings=settings)


def euler_step(sys):
    """Explicit Euler; first-order baseline for convergence studies."""

    def step(z, h):
        return z + h * hamiltonian_vf(sys, z)

    return StepMap(system=sys, stepper=step, name="euler")


def exact_step(sys, tol=1e-14):
    """The reference flow used as a step map (degenerate-study baseline)."""

    def step(z, h):
        return reference_flow(sys, z, h, tol)

    return StepMap(system=sys, stepper=step, name="exact")
