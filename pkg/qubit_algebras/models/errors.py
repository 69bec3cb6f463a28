"""Exception hierarchy."""
from __future__ import annotations


class QubitAlgebraError(ValueError):
    """Base class for all library errors."""


class NotNormalized(QubitAlgebraError):
    pass


class FamilyMismatch(QubitAlgebraError):
    pass


class NotElementary(QubitAlgebraError):
    pass


class TooLarge(QubitAlgebraError):
    pass


class NotComposable(QubitAlgebraError):
    pass


class NotEquivalent(QubitAlgebraError):
    pass


class SiteOutOfRange(QubitAlgebraError):
    pass


class BasisNotClosed(QubitAlgebraError):
    pass


class InputFormatError(QubitAlgebraError):
    """Malformed or unreadable input file."""
