"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BoundError(DomainError):
    """An integer argument falls outside the supported desk-scale range."""


class DepthError(DomainError):
    """A nested series has more levels than the evaluator supports."""


class PrecisionError(RuntimeError):
    """The requested error bound cannot be met within the iteration budget."""
