"""Exception hierarchy.

Every error carries its class name as a stable machine-readable ``name``.
``ValidationError`` subclasses signal malformed input values (a broken
invariant); ``DomainError`` subclasses signal that a well-formed request has
no answer (no lift exists, paths are not equivalent, ...).
"""


class PLTraceError(Exception):
    @property
    def name(self) -> str:
        return type(self).__name__


class ValidationError(PLTraceError, ValueError):
    pass


class DomainError(PLTraceError):
    pass


# -- invariant violations --------------------------------------------------

class BadEndpoints(ValidationError):
    pass


class NotMonotone(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class InvalidStopData(ValidationError):
    pass


class DuplicateValue(ValidationError):
    pass


class BadTimeRange(ValidationError):
    pass


class NotIncreasingTime(ValidationError):
    pass


# -- domain failures -------------------------------------------------------

class NotInjective(DomainError):
    pass


class NoRightLift(DomainError):
    pass


class BadExtraStops(DomainError):
    pass


class NoLeftFactor(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class EndpointMismatch(DomainError):
    pass


class NotEquivalent(DomainError):
    pass


class NotRegular(DomainError):
    pass


class WitnessMismatch(DomainError):
    pass


class NotLoopFree(DomainError):
    pass


class Unrenderable(DomainError):
    pass


# -- document format -------------------------------------------------------

class DocumentSyntaxError(PLTraceError):
    """Text that is not a well-formed document."""

    @property
    def name(self) -> str:
        return "SyntaxError"


class WrongKind(ValidationError):
    pass
