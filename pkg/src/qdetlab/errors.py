"""Exception types shared across the package."""

from __future__ import annotations


class QdetLabError(Exception):
    """Base class for all qdet-lab errors."""


class ParseError(QdetLabError, ValueError):
    """Malformed scalar string; ``position`` is the 0-based offset of the defect."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PoleError(QdetLabError, ArithmeticError):
    """A structurally forbidden denominator factor vanished during evaluation.

    ``location`` names the offending factor (parameter and index) so that a
    degenerate sample can be reported precisely.
    """

    def __init__(self, message: str, location: str | None = None):
        super().__init__(message if location is None else f"{message} [{location}]")
        self.location = location


class NonTerminatingSeriesError(QdetLabError, ValueError):
    """A series evaluation was requested for a spec with no terminating parameter."""


class DegenerateSampleError(QdetLabError, RuntimeError):
    """The rejection sampler failed to find a non-degenerate point."""
