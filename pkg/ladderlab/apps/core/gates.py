"""
Gate construction and the gate-set configuration language.

A gate-set configuration fixes the single-qubit generator S and the
two-qubit generator family T(i, j) of a ladder circuit:

    single: H * X                    # apply H, then X
    two: CX * CP(2*pi/2^j)           # apply CX, then CP

Products are written in circuit order: the leftmost factor acts first, so
"H * X" realizes the matrix X·H. Two-qubit gates act on target qubit i and
are controlled by qubit j. Angle schedules evaluate c·pi / 2^s with s taken
from the target index (i), the control index (j), the relative distance
d = j - i + 1, or an integer constant.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .exceptions import (AngleEvaluationError, GateSetParseError,
                         InvalidArgumentError)
from .numerics import DenseMatrix

logger = logging.getLogger(__name__)

_SQRT2_INV = 1 / np.sqrt(2)

HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
CONTROLLED_X = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)


class Pauli(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def matrix(self):
        return {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}[self.value]


# Divisor symbols of an angle schedule; None means no "/2^s" part.
SYMBOL_TARGET = "i"
SYMBOL_CONTROL = "j"
SYMBOL_DISTANCE = "d"
SYMBOL_CONST = "const"


@dataclass(frozen=True)
class AngleSchedule:
    """angle(i, j) = coefficient·pi / 2^s, s chosen by divisor_symbol."""

    coefficient: Fraction
    divisor_symbol: Optional[str] = None
    constant: int = 0

    def exponent(self, i, j):
        if self.divisor_symbol is None:
            return 0
        if self.divisor_symbol == SYMBOL_TARGET:
            return i
        if self.divisor_symbol == SYMBOL_CONTROL:
            return j
        if self.divisor_symbol == SYMBOL_DISTANCE:
            return j - i + 1
        return self.constant

    def evaluate(self, i, j):
        """
        Evaluate the angle for target i and control j.

        Raises:
            AngleEvaluationError: if the divisor exponent is negative
        """
        s = self.exponent(i, j)
        if s < 0:
            raise AngleEvaluationError(
                f"angle {self.render()} has negative exponent {s} at target {i}, control {j}"
            )
        return float(self.coefficient) * np.pi / 2.0**s

    def render(self):
        text = f"{self.coefficient}*pi"
        if self.divisor_symbol == SYMBOL_CONST:
            text += f"/2^{self.constant}"
        elif self.divisor_symbol is not None:
            text += f"/2^{self.divisor_symbol}"
        return text


@dataclass(frozen=True)
class SingleToken:
    name: str
    k: Optional[int] = None

    def render(self):
        return f"R({self.k})" if self.name == "R" else self.name


@dataclass(frozen=True)
class TwoToken:
    name: str
    angle: Optional[AngleSchedule] = None
    paulis: Optional[Tuple[Pauli, Pauli]] = None

    def render(self):
        if self.name == "CP":
            return f"CP({self.angle.render()})"
        if self.name == "EXP":
            pair = "".join(p.value for p in self.paulis)
            return f"EXP({pair}, {self.angle.render()})"
        return self.name


@dataclass(frozen=True)
class SingleGateExpr:
    factors: Tuple[SingleToken, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidArgumentError("single-qubit expression is empty")
        for token in self.factors:
            if token.name == "R" and (token.k is None or token.k < 1):
                raise InvalidArgumentError(f"R({token.k}) needs k >= 1")

    def render(self):
        return " * ".join(token.render() for token in self.factors)


@dataclass(frozen=True)
class TwoGateExpr:
    factors: Tuple[TwoToken, ...]

    def __post_init__(self):
        if not self.factors:
            raise InvalidArgumentError("two-qubit expression is empty")

    def render(self):
        return " * ".join(token.render() for token in self.factors)


@dataclass(frozen=True)
class GateSetConfig:
    """Single-qubit generator S and two-qubit generator family T(i, j)."""

    single: SingleGateExpr
    two: TwoGateExpr


def make_phase_gate(k):
    """R_k = diag(1, e^{2 pi i / 2^k})."""
    if k < 1:
        raise InvalidArgumentError(f"phase gate index must be >= 1, got {k}")
    return DenseMatrix(np.diag([1.0, np.exp(2j * np.pi / 2**k)]))


def make_named_single(token):
    """Fixed single-qubit gate by name: H, X or T."""
    if token == "H":
        return DenseMatrix(HADAMARD.copy())
    if token == "X":
        return DenseMatrix(PAULI_X.copy())
    if token == "T":
        return DenseMatrix(np.diag([1.0, np.exp(1j * np.pi / 4)]))
    raise InvalidArgumentError(f"unknown single-qubit gate {token!r}")


def realize_single_gate(expr):
    """2x2 matrix of a single-qubit expression, leftmost factor applied first."""
    result = np.eye(2, dtype=np.complex128)
    for token in expr.factors:
        if token.name == "R":
            factor = make_phase_gate(token.k)
        else:
            factor = make_named_single(token.name)
        result = factor.entries @ result
    return DenseMatrix(result)


def make_pauli_exponential(p, q, theta):
    """exp(i·theta·P (x) Q) = cos(theta)·I + i·sin(theta)·P (x) Q, since (P (x) Q)^2 = I."""
    generator = np.kron(Pauli(p).matrix, Pauli(q).matrix)
    return DenseMatrix(np.cos(theta) * np.eye(4) + 1j * np.sin(theta) * generator)


def realize_two_gate(expr, i, j):
    """
    4x4 matrix of a two-qubit expression on target i controlled by j.

    The local basis puts the control qubit in the high bit and the target in
    the low bit. EXP(PQ, a) places P on the target and Q on the control.

    Raises:
        InvalidArgumentError: if i == j
        AngleEvaluationError: if an angle schedule yields a negative exponent
    """
    if i == j:
        raise InvalidArgumentError(f"target and control coincide at qubit {i}")
    result = np.eye(4, dtype=np.complex128)
    for token in expr.factors:
        if token.name == "CX":
            factor = CONTROLLED_X
        elif token.name == "CP":
            phase = np.exp(1j * token.angle.evaluate(i, j))
            factor = np.diag([1.0, 1.0, 1.0, phase])
        else:
            target_pauli, control_pauli = token.paulis
            theta = token.angle.evaluate(i, j)
            factor = make_pauli_exponential(control_pauli, target_pauli, theta).entries
        result = factor @ result
    return DenseMatrix(result)


class _Scanner:
    """Character scanner over one expression that reports 1-based positions."""

    _INT = re.compile(r"\d+")

    def __init__(self, text, line, column_offset):
        self.text = text
        self.pos = 0
        self.line = line
        self.column_offset = column_offset

    def error(self, message):
        return GateSetParseError(message, self.line, self.column_offset + self.pos + 1)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, literal):
        self.skip_ws()
        return self.text.startswith(literal, self.pos)

    def accept(self, literal):
        if self.peek(literal):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal, what=None):
        if not self.accept(literal):
            raise self.error(f"expected {what or repr(literal)}")

    def integer(self, what="integer"):
        self.skip_ws()
        found = self._INT.match(self.text, self.pos)
        if not found:
            raise self.error(f"expected {what}")
        self.pos = found.end()
        return int(found.group())


def _parse_angle(scanner):
    sign = 1
    if scanner.accept("-"):
        sign = -1
    else:
        scanner.accept("+")
    numerator = scanner.integer("angle coefficient")
    denominator = 1
    if scanner.accept("/"):
        denominator = scanner.integer("coefficient denominator")
        if denominator == 0:
            raise scanner.error("malformed angle: zero denominator")
    scanner.expect("*", "'*' in angle")
    scanner.expect("pi", "'pi' in angle")
    coefficient = Fraction(sign * numerator, denominator)
    if not scanner.accept("/"):
        return AngleSchedule(coefficient)
    scanner.expect("2", "'2^' in angle")
    scanner.expect("^", "'2^' in angle")
    for symbol in (SYMBOL_TARGET, SYMBOL_CONTROL, SYMBOL_DISTANCE):
        if scanner.accept(symbol):
            return AngleSchedule(coefficient, symbol)
    constant = scanner.integer("divisor symbol i, j, d or an integer")
    return AngleSchedule(coefficient, SYMBOL_CONST, constant)


def _parse_single_token(scanner):
    if scanner.accept("R("):
        k = scanner.integer("phase gate index")
        if k < 1:
            raise scanner.error(f"R({k}) needs k >= 1")
        scanner.expect(")")
        return SingleToken("R", k)
    for name in ("H", "X", "T"):
        if scanner.accept(name):
            return SingleToken(name)
    raise scanner.error("unknown single-qubit token")


def _parse_two_token(scanner):
    if scanner.accept("CX"):
        return TwoToken("CX")
    if scanner.accept("CP("):
        angle = _parse_angle(scanner)
        scanner.expect(")")
        return TwoToken("CP", angle=angle)
    if scanner.accept("EXP("):
        scanner.skip_ws()
        pair = scanner.text[scanner.pos:scanner.pos + 2]
        if len(pair) != 2 or any(c not in "XYZ" for c in pair):
            raise scanner.error("expected a Pauli pair such as ZZ")
        scanner.pos += 2
        scanner.expect(",")
        angle = _parse_angle(scanner)
        scanner.expect(")")
        return TwoToken("EXP", angle=angle, paulis=(Pauli(pair[0]), Pauli(pair[1])))
    raise scanner.error("unknown two-qubit token")


def _parse_product(scanner, parse_token):
    if scanner.at_end():
        raise scanner.error("empty expression")
    factors = [parse_token(scanner)]
    while not scanner.at_end():
        scanner.expect("*", "'*' between gates")
        factors.append(parse_token(scanner))
    return tuple(factors)


def parse_gateset_config(text):
    """
    Parse gate-set configuration text.

    Args:
        text: a "single:" line followed by a "two:" line; "#" starts a comment

    Returns:
        GateSetConfig

    Raises:
        GateSetParseError: with the line and column of the first problem
    """
    sections = {}
    expected = ["single", "two"]
    last_line = 1
    text = text.removeprefix("\ufeff")
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        header = re.match(r"\s*(single|two)\s*:", content)
        if not header:
            column = len(content) - len(content.lstrip()) + 1
            raise GateSetParseError("expected 'single:' or 'two:'", line_no, column)
        name = header.group(1)
        if not expected or name != expected[0]:
            raise GateSetParseError(f"unexpected '{name}:' section", line_no, header.start(1) + 1)
        expected.pop(0)
        scanner = _Scanner(content[header.end():], line_no, header.end())
        if name == "single":
            sections[name] = SingleGateExpr(_parse_product(scanner, _parse_single_token))
        else:
            sections[name] = TwoGateExpr(_parse_product(scanner, _parse_two_token))
    if expected:
        raise GateSetParseError(f"missing '{expected[0]}:' section", last_line, 1)
    config = GateSetConfig(sections["single"], sections["two"])
    logger.debug(f"Parsed gate set: {render_gateset_config(config)!r}")
    return config


def render_gateset_config(config):
    """Canonical text form; parse_gateset_config inverts it."""
    return f"single: {config.single.render()}\ntwo: {config.two.render()}\n"
