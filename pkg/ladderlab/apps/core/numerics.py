"""
Dense complex linear algebra and state vectors shared by every lab module.

Basis label k of a 2^n dimensional space is read MSB-first: qubit 1 is the
most significant bit, k = k_1 2^(n-1) + ... + k_n. Matrices are row-major.
"""

import logging
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatchError, InvalidArgumentError

logger = logging.getLogger(__name__)

DEFAULT_ABS_TOL = 1e-10
DEFAULT_ZERO_TOL = 1e-12


@dataclass(frozen=True)
class Tolerance:
    """Absolute comparison tolerance and the zero threshold for sparsity scans."""

    abs_tol: float = DEFAULT_ABS_TOL
    zero_tol: float = DEFAULT_ZERO_TOL

    def __post_init__(self):
        if self.abs_tol < 0 or self.zero_tol < 0:
            raise InvalidArgumentError("tolerances must be nonnegative")


def _frozen(values, ndim, what):
    data = np.asarray(values, dtype=np.complex128)
    if data.ndim != ndim:
        raise InvalidArgumentError(f"{what} must be {ndim}-dimensional")
    if not np.all(np.isfinite(data)):
        raise InvalidArgumentError(f"{what} contains NaN or Inf")
    if data.flags.writeable:
        data.setflags(write=False)
    return data


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """
    Square complex matrix. The entries array is owned by the instance and
    made read-only on construction.
    """

    entries: np.ndarray

    def __post_init__(self):
        data = _frozen(self.entries, 2, "matrix")
        if data.shape[0] < 1 or data.shape[0] != data.shape[1]:
            raise InvalidArgumentError(f"matrix must be square, got {data.shape}")
        object.__setattr__(self, "entries", data)

    @property
    def dim(self):
        return self.entries.shape[0]

    def __repr__(self):
        return f"DenseMatrix(dim={self.dim})"


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes of an n-qubit state, length 2^n."""

    amplitudes: np.ndarray

    def __post_init__(self):
        data = _frozen(self.amplitudes, 1, "state vector")
        size = data.shape[0]
        if size < 1 or size & (size - 1):
            raise InvalidArgumentError(f"state length {size} is not a power of two")
        object.__setattr__(self, "amplitudes", data)

    @property
    def n_qubits(self):
        return self.amplitudes.shape[0].bit_length() - 1

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits})"


def require_same_dim(a, b):
    """Raise DimensionMismatchError unless a and b have the same dimension."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a, b):
    """Complex matrix product a·b."""
    require_same_dim(a, b)
    return DenseMatrix(a.entries @ b.entries)


def mat_tensor(a, b):
    """Kronecker product; a's index is the high-order block."""
    return DenseMatrix(np.kron(a.entries, b.entries))


def mat_adjoint(a):
    """Conjugate transpose."""
    return DenseMatrix(np.ascontiguousarray(a.entries.conj().T))


def apply_to_vector(a, v):
    """Matrix-vector product a·v."""
    if a.dim != v.amplitudes.shape[0]:
        raise DimensionMismatchError(
            f"matrix dimension {a.dim} does not match state length {v.amplitudes.shape[0]}"
        )
    return StateVector(a.entries @ v.amplitudes)


def max_abs_diff(a, b):
    """Largest entrywise |a - b|; the comparison primitive for every check."""
    require_same_dim(a, b)
    return float(np.max(np.abs(a.entries - b.entries)))


def identity(dim):
    if dim < 1:
        raise InvalidArgumentError("dimension must be at least 1")
    return DenseMatrix(np.eye(dim, dtype=np.complex128))


def basis_state(n_qubits, k):
    """Computational basis state |k> on n qubits."""
    size = 1 << n_qubits
    if not 0 <= k < size:
        raise InvalidArgumentError(f"basis index {k} out of range for {n_qubits} qubits")
    amplitudes = np.zeros(size, dtype=np.complex128)
    amplitudes[k] = 1.0
    return StateVector(amplitudes)


def embed_identity(u):
    """I_2 (x) u: u acting on every qubit but the most significant one."""
    return mat_tensor(identity(2), u)


def unitarity_residual(u):
    """max |U U^dagger - I| over all entries."""
    product = u.entries @ u.entries.conj().T
    return float(np.max(np.abs(product - np.eye(u.dim))))


def is_unitary(u, tol=DEFAULT_ABS_TOL):
    residual = unitarity_residual(u)
    if residual > tol:
        logger.debug(f"Unitarity residual {residual:.3e} exceeds {tol:.1e}")
    return residual <= tol
