"""
RootLab - Error Types
Exception hierarchy shared by the lattice, representation and builder modules.
"""

from typing import Any, Optional


class RootLabError(Exception):
    """Base class for RootLab errors."""


class InvalidDatumError(RootLabError, ValueError):
    """A root datum (or datum description) failed validation."""


class NotDominantError(RootLabError, ValueError):
    """A dominance precondition was violated."""

    def __init__(self, vector, message: Optional[str] = None):
        self.vector = tuple(vector)
        super().__init__(message or f"Not dominant: {self.vector}")


class CapExceededError(RootLabError):
    """An enumeration grew past its configured safety cap."""

    def __init__(self, what: str, cap: int):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeded cap of {cap}")


class NonIntegralError(RootLabError, ArithmeticError):
    """A linear system that must have an integral solution did not."""


class ClaimViolation(RootLabError):
    """A mathematical claim under verification failed."""

    def __init__(self, claim: str, witness: Any = None, detail: str = ""):
        self.claim = claim
        self.witness = witness
        self.detail = detail
        message = f"Claim '{claim}' violated"
        if detail:
            message += f": {detail}"
        if witness is not None:
            message += f" (witness: {witness})"
        super().__init__(message)


class UsageError(RootLabError, ValueError):
    """Bad command-line or API usage."""
