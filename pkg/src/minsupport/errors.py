"""Exception hierarchy shared by every module."""


class MinSupportError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MinSupportError, ValueError):
    """An integer parameter is outside the domain of the operation."""


class DimensionError(MinSupportError, ValueError):
    """Matrix dimensions are incompatible with the operation."""


class PreconditionError(MinSupportError, ValueError):
    """Input is well formed but violates a stated precondition."""


class NotMemberError(PreconditionError):
    """The matrix does not belong to M(n, m)."""


class ArgumentError(MinSupportError, ValueError):
    """An auxiliary argument (cycle witness, support set, ...) is invalid."""


class CapacityError(MinSupportError):
    """A brute-force routine was asked to run beyond its documented limit."""


class ParseError(MinSupportError, ValueError):
    """A matrix file could not be parsed."""
