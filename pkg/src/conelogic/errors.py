"""Structured errors shared across the package.

Every error that callers are expected to catch carries enough data to act on:
dimension mismatches name both dims, membership failures carry a separating
witness, capability errors say which limit was hit.
"""

from __future__ import annotations


class ConelogicError(Exception):
    """Base class for all package errors."""


class DimensionError(ConelogicError):
    def __init__(self, expected: int, got: int, where: str = ""):
        self.expected = expected
        self.got = got
        self.where = where
        msg = f"dimension mismatch: expected {expected}, got {got}"
        if where:
            msg += f" ({where})"
        super().__init__(msg)


class CapabilityError(ConelogicError):
    """A documented desk-scale limit was exceeded (not a bug)."""

    def __init__(self, limit: str, detail: str = ""):
        self.limit = limit
        self.detail = detail
        msg = f"capability limit: {limit}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class MembershipError(ConelogicError):
    """A vector is outside a cone; carries a separating functional."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        if witness is not None:
            message += f"; separating functional {witness}"
        super().__init__(message)


class CompositionError(ConelogicError):
    """Morphism endpoints do not line up."""


class BallError(ConelogicError):
    """A norm precondition (||x|| <= 1 or similar) failed provably."""

    def __init__(self, message: str, norm=None):
        self.norm = norm
        super().__init__(message)


class ParseError(ConelogicError):
    """Formula syntax error with a character position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class EnvError(ConelogicError):
    """Bad atom environment file or unbound atom."""


class NegativeCoefficientError(ConelogicError):
    """The norm oracle met a negative coefficient where positivity is required."""
