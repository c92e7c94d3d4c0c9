"""
Text formats for matrices, signals and reports.

Matrix file:   "N <dim>" then dim lines of dim "re,im" entries separated by
               single spaces.
Signal file:   one "re,im" pair per line.
Report:        "key = value" lines in a fixed key order.

Floats are written with 17 significant digits so they survive a round trip.
"""

import numpy as np

from .exceptions import MatrixFormatError
from .numerics import DenseMatrix
from .transforms import Signal


def format_real(value):
    # Adding 0.0 folds -0.0 into 0.0.
    return f"{float(value) + 0.0:.17g}"


def format_complex(value):
    return f"{format_real(value.real)},{format_real(value.imag)}"


def parse_complex(token, where):
    parts = token.split(",")
    if len(parts) != 2:
        raise MatrixFormatError(f"{where}: expected 're,im', got {token!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise MatrixFormatError(f"{where}: malformed number in {token!r}") from exc


def dump_matrix(m):
    lines = [f"N {m.dim}"]
    for row in m.entries:
        lines.append(" ".join(format_complex(value) for value in row))
    return "\n".join(lines) + "\n"


def load_matrix(text):
    """
    Parse the matrix file format.

    Raises:
        MatrixFormatError: on a bad header, row count, row width or number
    """
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "N" or not header[1].isdigit() or int(header[1]) < 1:
        raise MatrixFormatError(f"line 1: expected 'N <dim>', got {lines[0]!r}")
    dim = int(header[1])
    rows = [line for line in lines[1:] if line.strip()]
    if len(rows) != dim:
        raise MatrixFormatError(f"expected {dim} rows, found {len(rows)}")
    entries = np.empty((dim, dim), dtype=np.complex128)
    for r, line in enumerate(rows):
        tokens = line.split()
        if len(tokens) != dim:
            raise MatrixFormatError(f"row {r + 1}: expected {dim} entries, found {len(tokens)}")
        for c, token in enumerate(tokens):
            entries[r, c] = parse_complex(token, f"row {r + 1}, column {c + 1}")
    try:
        return DenseMatrix(entries)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def dump_signal(s):
    return "".join(f"{format_complex(value)}\n" for value in s.samples)


def load_signal(text):
    samples = [
        parse_complex(line.strip(), f"line {number}")
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not samples:
        raise MatrixFormatError("empty signal file")
    try:
        return Signal(np.array(samples, dtype=np.complex128))
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc


def format_report(pairs):
    """Serialize (key, value) pairs; floats get 17 significant digits."""
    lines = []
    for key, value in pairs:
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, (float, np.floating)):
            text = format_real(value)
        else:
            text = str(value)
        lines.append(f"{key} = {text}")
    return "\n".join(lines) + "\n"
