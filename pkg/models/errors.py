"""
Exception hierarchy for AnnularSkein.

Every error raised by the library derives from SkeinError so callers
(notably the command-line tool) can map failures onto exit codes.
"""

from typing import Any, Optional


class SkeinError(Exception):
    """Base exception for all AnnularSkein errors."""
    pass


class DiagramParseError(SkeinError):
    """Raised when a braid word or annular PD document cannot be parsed or validated."""
    pass


class DisconnectedDiagramError(SkeinError):
    """Raised when an operation needs a connected diagram and gets a split one."""
    pass


class CapacityError(SkeinError):
    """Raised when a diagram exceeds the configured cube-size cap."""

    def __init__(self, crossings: int, cap: int):
        self.crossings = crossings
        self.cap = cap
        super().__init__(f"{crossings} crossings exceed the cube-size cap of {cap}")


class DimensionMismatchError(SkeinError):
    """Raised when matrix or vector dimensions are inconsistent."""
    pass


class InvariantViolation(SkeinError):
    """Raised when an internal algebraic or topological invariant fails."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.message = message
        self.witness = witness
        super().__init__(self.message)

    def __str__(self):
        if self.witness is not None:
            return f"{self.message} (witness: {self.witness})"
        return self.message


class TargetClassError(SkeinError):
    """Raised when a T-value target class is absent or zero in homology."""
    pass


class NotABraidClosureError(SkeinError):
    """Raised when a braid-only operation receives a general diagram."""
    pass


class UnknownSuiteError(SkeinError):
    """Raised when a check suite name is not registered."""
    pass
