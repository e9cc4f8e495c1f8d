"""Domain-level exceptions.

Everything here means "the input was mathematically outside the operation's
domain", as opposed to a programming error.  The CLI maps DomainError to
exit status 1; argparse usage errors keep their conventional status 2.
"""


class DomainError(Exception):
    """Base class for all domain failures."""


class ConstraintError(DomainError):
    """A constructor's parameter constraints were violated."""


class NotPeriodOneError(DomainError):
    """The matrix is not of mutation period 1."""


class NotPeriodicError(DomainError):
    """The matrix does not have the mutation period required here."""


class NotSinkTypeError(DomainError):
    """The matrix is not a nonnegative combination of sink-type primitives."""


class ZeroTermError(DomainError):
    """A zero term appeared where a division by it was required."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"zero term at index {index}")


class PeriodicityViolationError(DomainError):
    """Quantities that must repeat along a run failed to do so."""


class ConsistencyError(DomainError):
    """Two independent computations of the same quantity disagreed."""
