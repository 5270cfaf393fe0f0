from __future__ import annotations

from typing import Optional


class CycloSynthError(Exception):
    """Root of every error the package raises on purpose. `exit_code` is what the CLI returns."""

    exit_code: int = 4


class UsageError(CycloSynthError):
    exit_code = 1


class ParseError(CycloSynthError):
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        if self.column is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, column {self.column}: {self.message}"


class PreconditionError(CycloSynthError, ValueError):
    """A mathematical precondition does not hold (non-unitary input, unsupported degree, ...)."""

    exit_code = 3


class DegreeMismatchError(PreconditionError):
    pass


class DimensionMismatchError(PreconditionError):
    pass


class VerificationError(CycloSynthError):
    """An internal check failed. Every such failure would contradict a proven lemma."""

    exit_code = 4
