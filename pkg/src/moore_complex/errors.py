"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class ComplexError(Exception):
    """Base class for all errors raised by moore_complex."""


class InvalidSimplexError(ComplexError, ValueError):
    pass


class DimensionError(ComplexError, ValueError):
    pass


class RankRangeError(ComplexError, IndexError):
    pass


class CapacityError(ComplexError):
    """A size guard (memory, word width, oracle cap) was exceeded."""


class DomainError(ComplexError, ValueError):
    """Parameters fall outside the hypotheses under which a bound is stated."""


class UndefinedBaseError(DomainError):
    pass


class ParameterError(ComplexError, ValueError):
    pass


class InvalidEdgeError(ComplexError, ValueError):
    pass


class ParseError(ComplexError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
