"""Implicit-equation solvers used by the implicit step maps."""
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, SingularJacobianError
from .poisson import jacobian_fd

MAX_CONDITION = 1e12


@dataclass(frozen=True)
class SolverSettings:
    tolerance: float = 1e-12
    max_iterations: int = 50
    fd_step: float = 1e-7
    damping: float = 1.0

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")
        if self.max_iterations < 1:
            raise DomainError("max_iterations must be at least 1")
        if not 0 < self.damping <= 1:
            raise DomainError("damping must lie in (0, 1]")
        if not self.fd_step > 0:
            raise DomainError("fd_step must be positive")


DEFAULT_SETTINGS = SolverSettings()


def fixed_point(g, x0, settings=DEFAULT_SETTINGS, full_output=False):
    """Solve ``x = g(x)`` by damped fixed-point iteration.

    Stops once ``|x - g(x)| <= settings.tolerance`` and returns ``g(x)``, whose
    residual is smaller still for a contraction. With ``full_output`` also the
    number of iterations (calls to ``g``) used.
    """
    x = np.array(x0, dtype=float)
    d = settings.damping
    residual = np.inf
    for it in range(1, settings.max_iterations + 1):
        gx = np.asarray(g(x), dtype=float)
        residual = np.linalg.norm(x - gx)
        if residual <= settings.tolerance:
            return (gx, it) if full_output else gx
        if not np.isfinite(residual):
            break
        x = gx if d == 1.0 else (1.0 - d) * x + d * gx
    raise ConvergenceError(
        f"fixed-point iteration did not converge (residual {residual:.3e})",
        residual=residual,
        iterations=settings.max_iterations,
    )


def newton_fd(F, x0, settings=DEFAULT_SETTINGS, full_output=False):
    """Solve ``F(x) = 0`` by Newton's method with a central-difference Jacobian.

    Scalars are accepted and returned as scalars. Raises
    SingularJacobianError when the Jacobian condition number exceeds 1e12 and
    ConvergenceError when the iteration budget runs out.
    """
    scalar = np.ndim(x0) == 0
    x = np.atleast_1d(np.array(x0, dtype=float))

    def Fv(y):
        return np.atleast_1d(np.asarray(F(y[0] if scalar else y), dtype=float))

    residual = np.inf
    for it in range(settings.max_iterations + 1):
        fx = Fv(x)
        residual = np.linalg.norm(fx)
        if residual <= settings.tolerance:
            out = x[0] if scalar else x
            return (out, it) if full_output else out
        if not np.isfinite(residual) or it == settings.max_iterations:
            break
        J = jacobian_fd(Fv, x, settings.fd_step)
        if not np.all(np.isfinite(J)) or np.linalg.cond(J) > MAX_CONDITION:
            raise SingularJacobianError(
                "Newton Jacobian is singular", residual=residual, iterations=it
            )
        x = x - settings.damping * np.linalg.solve(J, fx)
    raise ConvergenceError(
        f"Newton iteration did not converge (residual {residual:.3e})",
        residual=residual,
        iterations=settings.max_iterations,
    )
