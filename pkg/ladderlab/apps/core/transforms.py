"""
Forward-direction reference transforms: dense DFT, radix-2 FFT, twiddle
diagonals, the radix-2 matrix recursion and the QFT reference matrix.

Every transform states its convention explicitly. The QFT reference matrix
is the adjoint of the unitary DFT with a negative exponent.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from .exceptions import InvalidArgumentError, NotPowerOfTwoError
from .gates import HADAMARD
from .numerics import DenseMatrix

logger = logging.getLogger(__name__)


class Normalization(str, Enum):
    NONE = "none"
    UNITARY = "unitary"


@dataclass(frozen=True)
class DftConvention:
    """Exponent sign (+1 or -1) and normalization of a Fourier transform."""

    exponent_sign: int = -1
    normalization: Normalization = Normalization.NONE

    def __post_init__(self):
        if self.exponent_sign not in (1, -1):
            raise InvalidArgumentError(f"exponent sign must be +1 or -1, got {self.exponent_sign}")
        object.__setattr__(self, "normalization", Normalization(self.normalization))

    def inverse(self):
        return DftConvention(-self.exponent_sign, self.normalization)

    def scale(self, size):
        if self.normalization is Normalization.UNITARY:
            return 1 / np.sqrt(size)
        return 1.0


UNITARY_FORWARD = DftConvention(-1, Normalization.UNITARY)


@dataclass(frozen=True, eq=False)
class Signal:
    """Complex samples x_0 ... x_{N-1}."""

    samples: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.samples, dtype=np.complex128)
        if data.ndim != 1 or data.shape[0] < 1:
            raise InvalidArgumentError("signal must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(data)):
            raise InvalidArgumentError("signal contains NaN or Inf")
        if data.flags.writeable:
            data.setflags(write=False)
        object.__setattr__(self, "samples", data)

    def __len__(self):
        return self.samples.shape[0]


def _is_power_of_two(size):
    return size >= 1 and size & (size - 1) == 0


def _require_power_of_two(size):
    if not _is_power_of_two(size):
        raise NotPowerOfTwoError(f"length {size} is not a power of two")


def _require_even(size):
    if size < 2 or size % 2:
        raise InvalidArgumentError(f"length {size} must be even")


def dft_matrix(size, conv):
    """Entries scale·e^{sign·2 pi i·k·m/N}."""
    if size < 1:
        raise InvalidArgumentError("DFT size must be at least 1")
    k = np.arange(size)
    exponent = np.outer(k, k) % size
    entries = conv.scale(size) * np.exp(conv.exponent_sign * 2j * np.pi * exponent / size)
    return DenseMatrix(entries)


def _fft(x, sign):
    size = x.shape[0]
    if size == 1:
        return x.copy()
    even = _fft(x[0::2], sign)
    odd = _fft(x[1::2], sign)
    twiddled = np.exp(sign * 2j * np.pi * np.arange(size // 2) / size) * odd
    return np.concatenate([even + twiddled, even - twiddled])


def fft_radix2(s, conv):
    """
    Recursive radix-2 FFT: X_k = E_k + w^k O_k, X_{k+N/2} = E_k - w^k O_k.

    Raises:
        NotPowerOfTwoError: if len(s) is not a power of two
    """
    _require_power_of_two(len(s))
    return Signal(conv.scale(len(s)) * _fft(s.samples, conv.exponent_sign))


def ifft_radix2(s, conv):
    """Inverse of fft_radix2 under the same convention."""
    _require_power_of_two(len(s))
    size = len(s)
    scale = conv.scale(size) if conv.normalization is Normalization.UNITARY else 1 / size
    return Signal(scale * _fft(s.samples, -conv.exponent_sign))


def twiddle_diagonal(size, conv):
    """diag(1, w, ..., w^{N/2-1}), w = e^{sign·2 pi i/N}."""
    _require_even(size)
    k = np.arange(size // 2)
    return DenseMatrix(np.diag(np.exp(conv.exponent_sign * 2j * np.pi * k / size)))


def a_matrix_tensor(n, conv):
    """Tensor product of diag(1, e^{sign·2 pi i/2^k}) for k = 2 ... n, k = 2 most significant."""
    if n < 2:
        raise InvalidArgumentError(f"twiddle tensor needs n >= 2, got {n}")
    factors = [
        np.diag([1.0, np.exp(conv.exponent_sign * 2j * np.pi / 2**k)]) for k in range(2, n + 1)
    ]
    return DenseMatrix(reduce(np.kron, factors))


def even_odd_shuffle(size):
    """Source order that lists even indices, then odd indices."""
    _require_even(size)
    return tuple(range(0, size, 2)) + tuple(range(1, size, 2))


def bit_reversal_perm(n):
    """perm[k] = k with its n bits reversed."""
    if n < 1:
        raise InvalidArgumentError(f"bit reversal needs n >= 1, got {n}")
    return tuple(int(format(k, f"0{n}b")[::-1], 2) for k in range(1 << n))


def apply_permutation(values, perm):
    """Gather: result[i] = values[perm[i]]."""
    return np.asarray(values)[list(perm)]


def permutation_matrix(perm):
    """P with (P x)_i = x_{perm[i]}."""
    size = len(perm)
    entries = np.zeros((size, size), dtype=np.complex128)
    entries[np.arange(size), list(perm)] = 1.0
    return DenseMatrix(entries)


def _recursion(size):
    if size == 2:
        return HADAMARD.copy()
    half = _recursion(size // 2)
    twiddled = twiddle_diagonal(size, UNITARY_FORWARD).entries @ half
    butterfly = np.block([[half, twiddled], [half, -twiddled]]) / np.sqrt(2)
    shuffled = np.empty_like(butterfly)
    shuffled[:, list(even_odd_shuffle(size))] = butterfly
    return shuffled


def dft_recursion_build(size):
    """
    Unitary DFT built from the radix-2 matrix recursion

        F_N = 1/sqrt(2) [[F, A F], [F, -A F]] · P_N

    where P_N gathers even inputs before odd ones, bottoming out at F_2.
    F_1 is [1].

    Raises:
        NotPowerOfTwoError: if size is not a power of two
    """
    _require_power_of_two(size)
    if size == 1:
        return DenseMatrix(np.ones((1, 1)))
    return DenseMatrix(_recursion(size))


def qft_reference_matrix(n):
    """Entry (m, k) = 2^{-n/2} e^{+2 pi i·k·m/2^n}."""
    if n < 1:
        raise InvalidArgumentError(f"QFT needs n >= 1, got {n}")
    return dft_matrix(1 << n, DftConvention(1, Normalization.UNITARY))
