"""Exception types shared across the package."""

from __future__ import annotations


class TToneError(Exception):
    """Base class for all package errors."""


class InputError(TToneError, ValueError):
    """Malformed or out-of-contract input."""


class ParseError(InputError):
    """Text could not be parsed; carries a line or byte offset when known."""

    def __init__(self, message: str, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset


class UnsupportedInput(InputError):
    """Input is well formed but outside what the operation handles."""


class HypothesisViolated(TToneError):
    """The graph does not satisfy the structural hypothesis a colorer relies on."""


class ColoringDefect(TToneError, AssertionError):
    """An extension that a proven guarantee says must succeed did not.

    Raised instead of silently falling back; it always indicates a bug or a
    violated precondition that slipped past the checks.
    """


class LimitReached(TToneError):
    """A solver node or time limit fired before a conclusive answer."""
