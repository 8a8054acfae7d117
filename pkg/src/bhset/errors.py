"""Exception hierarchy shared by the library, the CLI, and the service."""


class BhSetError(Exception):
    """Base class for all domain errors raised by this package."""


class ScalarSyntaxError(BhSetError, ValueError):
    """Input text does not match the scalar grammar."""


class BackendMismatchError(BhSetError, ValueError):
    """Operands use different backends, or an operation forbids this backend."""


class DimensionMismatchError(BhSetError, ValueError):
    """Vectors or compositions of incompatible length/total were combined."""


class CountOverflowError(BhSetError, OverflowError):
    """The composition count does not fit in a signed 64-bit integer."""


class NotBhVectorError(BhSetError, ValueError):
    """An operation requiring the B_h property received a vector without it."""


class DegenerateVectorError(BhSetError, ValueError):
    """The input admits no separation gap (fewer than two distinct sums)."""


class BudgetExceededError(BhSetError, RuntimeError):
    """The instance size exceeds the configured enumeration budget."""


class VerificationFailedError(BhSetError, RuntimeError):
    """Internal consistency re-check failed; indicates an implementation bug."""
