"""Typed exceptions raised across the package."""


class WeylMaxError(Exception):
    """Base class for all package errors."""


class InvalidCartanType(WeylMaxError, ValueError):
    """Family/rank combination outside the admissible table."""


class MismatchedRootSystems(WeylMaxError, ValueError):
    """Binary operation on elements of different root systems."""


class EnumerationCapExceeded(WeylMaxError, RuntimeError):
    """Group too large for a full-enumeration operation.

    Carries the offending group order and the cap that refused it.
    """

    def __init__(self, message, *, order=None, cap=None):
        super().__init__(message)
        self.order = order
        self.cap = cap


class EmptyElementSet(WeylMaxError, ValueError):
    """An operation requiring a non-empty element set got an empty one."""


class ChainNotFound(WeylMaxError, RuntimeError):
    """No non-length-increasing conjugation chain was found.

    This should never fire for a correct implementation; it signals a bug,
    not a property of the input.
    """


class WordParseError(WeylMaxError, ValueError):
    """A word string contained a malformed or out-of-range token."""

    def __init__(self, message, *, token=None):
        super().__init__(message)
        self.token = token
