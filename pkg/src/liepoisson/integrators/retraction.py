"""Retraction-based Lie-Poisson integrators with the exponential as retraction.

Each step solves for an auxiliary point (a covector ``nu`` for the Hamiltonian
variant, an algebra point ``xi`` for the Lagrangian one) and finishes with
``mu_{k+1} = Ad_star(g, mu_k)``, so the coadjoint orbit is kept exactly.

``scaling="full"``::

    mu_k = dexpinv_dual(h v, m),  g = exp(h v)

``scaling="half"`` keeps the half-step chart and the h/2 momentum prefactor::

    mu_k = (h/2) dexpinv_dual(h v / 2, m),  g = exp(h v / 2)

with ``(v, m) = (grad H(nu), nu)`` or ``(xi, I xi)``. The half form makes the
auxiliary variable of size ``2 mu_k / h`` and is not consistent with the
flow; it is kept for comparison.
"""
import numpy as np

from ..errors import DomainError
from ..lie3 import Ad_star, dexpinv_dual, exp_so3
from ..poisson import StepMap
from ..solvers import SolverSettings, newton_fd

NEWTON_SETTINGS = SolverSettings(tolerance=1e-13)
VARIANTS = ("hamiltonian", "lagrangian")
SCALINGS = ("full", "half")


def check_step_size(body, mu, h):
    if h * np.linalg.norm(body.gradient(mu)) > 1.0:
        raise DomainError("step too large for the exponential chart (h |grad H| > 1)")


def retraction_group(body, mu, h, variant="hamiltonian", scaling="full", settings=NEWTON_SETTINGS):
    """Rotation ``g`` of one retraction step from ``mu``."""
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    if scaling not in SCALINGS:
        raise DomainError(f"unknown scaling {scaling!r}")
    mu = np.asarray(mu, dtype=float)
    check_step_size(body, mu, h)
    c = 0.5 * h if scaling == "half" else h
    factor = 0.5 * h if scaling == "half" else 1.0
    if variant == "hamiltonian":
        velocity, momentum, aux0 = body.gradient, (lambda nu: nu), mu / factor
    else:
        velocity, momentum = (lambda xi: xi), body.moments.__mul__
        aux0 = body.gradient(mu) / factor

    def F(aux):
        return factor * dexpinv_dual(c * velocity(aux), momentum(aux)) - mu

    aux = newton_fd(F, aux0, settings)
    return exp_so3(c * velocity(aux))


def retraction_lp_step(system, body, variant="hamiltonian", scaling="full", settings=NEWTON_SETTINGS):
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    if scaling not in SCALINGS:
        raise DomainError(f"unknown scaling {scaling!r}")

    def step(mu, h):
        g = retraction_group(body, mu, h, variant, scaling, settings)
        return Ad_star(g, mu)

    name = "retraction-h" if variant == "hamiltonian" else "retraction-l"
    return StepMap(system=system, stepper=step, name=name, settings=settings)
