"""Exception types raised deliberately by this package.

Every partial operation fails loudly with one of these; nothing returns a
silent sentinel in place of an error.
"""


class InfnatError(Exception):
    """Base class for all errors raised by infnat operations."""


class MalformedNameError(InfnatError):
    """A text name does not match the canonical-name grammar."""


class NoPredecessorError(InfnatError):
    """Zero has no predecessor."""


class UndefinedDifferenceError(InfnatError):
    """The requested difference has no value (negative, or no rule exists)."""


class UndefinedQuotientError(InfnatError):
    """The requested quotient has no value (no rule exists)."""


class DivisionByZeroError(InfnatError):
    """Division by the zero cardinal or the zero element."""


class InvalidSetError(InfnatError):
    """An explicit set description contains duplicate elements."""


class NotRepresentableError(InfnatError):
    """The element has no binary digit pattern."""


class WrongClassError(InfnatError):
    """The element does not belong to the named landmark class."""


class PreconditionError(InfnatError):
    """Operands violate a stated operation precondition."""


class UnsupportedCombinationError(InfnatError):
    """No evaluation rule exists for this sequence family over this domain."""


class BoundExceededError(InfnatError):
    """A requested enumeration length exceeds the supported bound."""


class MalformedLayoutError(InfnatError):
    """A gap-block layout places two separator elements next to each other."""
