"""
Exception hierarchy for the transform lab.
"""


class LadderLabError(Exception):
    """Base class for every error raised by the lab."""


class DimensionMismatchError(LadderLabError, ValueError):
    """Operands have incompatible dimensions."""


class InvalidArgumentError(LadderLabError, ValueError):
    """An argument is outside the range an operation accepts."""


class NotPowerOfTwoError(InvalidArgumentError):
    """A length that must be a power of two is not."""


class AngleEvaluationError(InvalidArgumentError):
    """An angle schedule produced a negative divisor exponent."""


class MatrixFormatError(LadderLabError, ValueError):
    """A matrix or signal file is malformed."""


class GateSetParseError(LadderLabError, ValueError):
    """
    Gate-set configuration text could not be parsed.

    Attributes:
        line: 1-based line number of the offending token
        column: 1-based column of the offending token
    """

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CapExceededError(LadderLabError):
    """A requested size exceeds a configured resource cap."""

    def __init__(self, requested, cap, what="qubit count"):
        super().__init__(f"{what} {requested} exceeds cap {cap}")
        self.requested = requested
        self.cap = cap
