"""Lie-Poisson integrators on so(3)* and tools to study them."""
__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConfigError,
    ConvergenceError,
    DegenerateStudyError,
    DomainError,
    SingularJacobianError,
)
from .models import RigidBody, harmonic_oscillator_system, reference_flow, rigid_body_system  # noqa: E402
from .poisson import PoissonSystem, StepMap, hamiltonian_vf, poisson_defect  # noqa: E402

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "DegenerateStudyError",
    "DomainError",
    "PoissonSystem",
    "RigidBody",
    "SingularJacobianError",
    "StepMap",
    "__version__",
    "hamiltonian_vf",
    "harmonic_oscillator_system",
    "poisson_defect",
    "reference_flow",
    "rigid_body_system",
]
