"""Exception types shared across the package."""

from __future__ import annotations


class SmoothWordsError(Exception):
    """Base class for all errors raised by this package."""


class DerivationError(SmoothWordsError):
    """A derivation operator was applied outside its domain.

    Carries the report describing which run broke the rules, so callers
    can show exactly where a word stops being derivable.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class NotDerivableError(DerivationError):
    """The two-sided derivative is undefined for this word."""


class NotRDerivableError(DerivationError):
    """The right-side derivative is undefined for this word."""


class InvalidFamilyError(SmoothWordsError):
    """Requested a bispecial tree family that does not exist for the alphabet."""


class NotPrimitiveError(SmoothWordsError):
    """Matrix is not primitive (no small power is strictly positive)."""


class NoConvergenceError(SmoothWordsError):
    """Iterative eigenvalue estimation failed to stabilise."""


class BoundViolationError(SmoothWordsError):
    """A fitted growth bound failed verification against enumerated data."""


class ConstructionError(SmoothWordsError):
    """An internal constructive step produced an object failing its own checks."""


class ResourceCapError(SmoothWordsError):
    """Refused to start a computation that exceeds a configured size cap."""
