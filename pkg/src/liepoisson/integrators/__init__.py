"""Integrator families and the name registry used by the harness."""
from ..errors import ConfigError
from ..models import RigidBody
from ..solvers import DEFAULT_SETTINGS, SolverSettings
from .collective import collective_step, hopf_map, hopf_section
from .discrete_gradient import discrete_gradient_step, mean_value_gradient, midpoint_gradient
from .generating import GeneratingSeries, hj_generating_step
from .generic import euler_step, exact_step, midpoint_step
from .retraction import retraction_group, retraction_lp_step
from .variational import (
    DiscreteRigidBody,
    discrete_ep_rigid_step,
    discrete_lp_step,
    lie_euler_group_map,
    reconstruct,
)

GENERIC = ("midpoint", "dgrad-mean", "dgrad-mid", "euler", "exact")
RIGID_ONLY = ("dep-rigid", "dlp", "retraction-h", "retraction-l", "collective", "hj1", "hj2")
INTEGRATORS = GENERIC[:3] + RIGID_ONLY + GENERIC[3:]
ORBIT_PRESERVING = ("dep-rigid", "dlp", "retraction-h", "retraction-l")


def make_integrator(name, system, body=None, settings=None, scaling="full"):
    """Build the step map registered under ``name``.

    ``body`` is required for the rigid-body families. ``settings`` overrides
    the family's default solver settings.
    """
    if name not in INTEGRATORS:
        raise ConfigError(f"unknown integrator {name!r}; choose from {', '.join(INTEGRATORS)}")
    if name in RIGID_ONLY and not isinstance(body, RigidBody):
        raise ConfigError(f"integrator {name!r} needs the rigidbody model")
    kw = {} if settings is None else {"settings": settings}
    if name == "midpoint":
        return midpoint_step(system, **kw)
    if name == "dgrad-mean":
        return discrete_gradient_step(system, "mean_value", **kw)
    if name == "dgrad-mid":
        return discrete_gradient_step(system, "midpoint", **kw)
    if name == "euler":
        return euler_step(system)
    if name == "exact":
        return exact_step(system)
    if name == "dep-rigid":
        return discrete_ep_rigid_step(system, body, **kw)
    if name == "dlp":
        return discrete_lp_step(system, lie_euler_group_map(body))
    if name == "retraction-h":
        return retraction_lp_step(system, body, "hamiltonian", scaling, **kw)
    if name == "retraction-l":
        return retraction_lp_step(system, body, "lagrangian", scaling, **kw)
    if name == "collective":
        return collective_step(system, **kw)
    return hj_generating_step(system, body, int(name[2:]), **kw)


__all__ = [
    "DEFAULT_SETTINGS",
    "DiscreteRigidBody",
    "GeneratingSeries",
    "INTEGRATORS",
    "ORBIT_PRESERVING",
    "SolverSettings",
    "collective_step",
    "discrete_ep_rigid_step",
    "discrete_gradient_step",
    "discrete_lp_step",
    "euler_step",
    "exact_step",
    "hj_generating_step",
    "hopf_map",
    "hopf_section",
    "lie_euler_group_map",
    "make_integrator",
    "mean_value_gradient",
    "midpoint_gradient",
    "midpoint_step",
    "reconstruct",
    "retraction_group",
    "retraction_lp_step",
]
