"""Exception types shared across the package."""


class RedeiBergeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RedeiBergeError, ValueError):
    """Malformed input: a type invariant or precondition was violated."""


class CapacityError(RedeiBergeError):
    """A requested size exceeds a configured enumeration cap."""


class DomainError(RedeiBergeError):
    """Structurally valid input lies outside an operation's domain."""


class ConsistencyError(RedeiBergeError):
    """An exactness or internal identity check failed; the input cannot be
    what it claims to be."""


class PrecisionError(ConsistencyError):
    """A conversion that must stay integral hit a non-integer value."""
