"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative solve ran out of budget.

    The last residual norm and iteration count are kept on the instance so
    callers (and the CLI) can report them.
    """

    def __init__(self, message, residual=float("nan"), iterations=0, step_index=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
        self.step_index = step_index


class SingularJacobianError(ConvergenceError):
    """Newton Jacobian is numerically singular."""


class ConfigError(ValueError):
    """Invalid study configuration."""


class DegenerateStudyError(RuntimeError):
    """Too few usable points for a log-log fit."""
