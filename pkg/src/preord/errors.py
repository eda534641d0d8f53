"""Exception types shared by every module."""


class PreordError(Exception):
    """Base class for all errors raised by this library."""


class ValidationError(PreordError, ValueError):
    """An input violates a structural invariant (shape, range, closure, ...)."""


class BudgetError(PreordError):
    """An enumeration or search would exceed its configured budget."""


class ParseError(PreordError, ValueError):
    """Malformed object or morphism text."""


class NotShortExactError(ValidationError):
    """A pair of morphisms failed to be a short exact sequence; the message
    names the failing half."""
