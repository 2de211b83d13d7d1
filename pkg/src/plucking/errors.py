"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PluckingError(Exception):
    """Base class for domain errors raised by this package."""


class NotDivisible(PluckingError, ArithmeticError):
    """Polynomial division left a remainder or a negative quotient coefficient."""


class NotSymmetric(PluckingError, ValueError):
    pass


class NotUnimodal(PluckingError, ValueError):
    pass


class DegreeMismatch(PluckingError, ValueError):
    pass


class TreeParseError(PluckingError, ValueError):
    pass


class IllegalMove(PluckingError, ValueError):
    """An exchange move or leaf reference that does not apply to the tree."""


class NotRealizable(PluckingError):
    """No rooted tree has the requested plucking polynomial.

    ``witness`` holds the q-integer index that repeats in the reduced numerator
    when that is the reason.
    """

    def __init__(self, message: str, witness: int | None = None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(PluckingError):
    """An exhaustive enumeration was asked to go past its configured size limit."""


class InternalInconsistency(PluckingError, AssertionError):
    """A self-check failed. Seeing this means a bug, not bad input."""
