"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(ValueError):
    """Operands are individually valid but incompatible (e.g. limit mismatch)."""


class UnsupportedError(NotImplementedError):
    """The requested case has no closed form / is not implemented."""


class InvariantViolation(AssertionError):
    """An internal consistency check failed."""
