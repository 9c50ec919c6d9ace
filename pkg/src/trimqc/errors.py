"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: invalid arguments -> 1,
resource-limit refusals -> 2, solver non-convergence -> 3.
"""


class TrimqcError(Exception):
    """Base class for all trimqc errors."""


class InvalidArgumentError(TrimqcError):
    """A precondition on user-supplied arguments was violated."""


class ResourceLimitError(TrimqcError):
    """The request exceeds a configured size cap and was refused."""


class TruncationError(ResourceLimitError):
    """A truncated spectrum cannot support the requested thermal state."""


class ConvergenceError(TrimqcError):
    """An iterative solve failed to converge within its iteration budget."""

    def __init__(self, message: str, best_residual: float | None = None):
        super().__init__(message)
        self.best_residual = best_residual
