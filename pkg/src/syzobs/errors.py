"""Shared exception types."""

from __future__ import annotations


class SyzobsError(Exception):
    """Base class for all package errors."""


class RingMismatchError(SyzobsError):
    """Operands live in different rings; coercion is never attempted."""


class NonHomogeneousError(SyzobsError):
    """Graded-only operation received non-homogeneous input."""


class DegreeBoundExceeded(SyzobsError):
    """A graded scan hit its degree cap while data was still nonzero."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (bound {bound})")
        self.bound = bound


class InternalConsistencyError(SyzobsError):
    """Two independent computations of the same value disagree, or a
    certified-to-exist solve failed.  Always a bug, never user error."""


class ParseError(SyzobsError):
    """Ideal-file syntax error with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
