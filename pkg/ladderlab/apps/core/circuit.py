"""
Recursive ladder circuits.

U_n = (I (x) U_{n-1}) V_n, where the ladder block V with top qubit q applies
the single-qubit generator S to q and then T(target q, control r) for
r = q+1 ... n. Blocks run top qubit first; an optional bit-reversal stage of
swaps follows the last block.

States are processed by gate streaming: each 2x2 or 4x4 gate is applied to
the amplitude tensor in place of forming any 2^n x 2^n operator.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .exceptions import (CapExceededError, DimensionMismatchError,
                         InvalidArgumentError)
from .gates import realize_single_gate, realize_two_gate
from .numerics import (DenseMatrix, StateVector, embed_identity,
                       max_abs_diff, mat_mul)

logger = logging.getLogger(__name__)

DENSE_QUBIT_CAP = 12
STREAM_QUBIT_CAP = 24
BLOCK_COLUMNS = 256


@dataclass(frozen=True)
class GatePlacement:
    """One gate of a ladder block; control is None for single-qubit gates."""

    target: int
    local_matrix: DenseMatrix
    control: Optional[int] = None

    @property
    def kind(self):
        return "single" if self.control is None else "two"

    @property
    def qubits(self):
        # Local ordering: control is the high bit.
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)


@dataclass(frozen=True)
class LadderBlock:
    top_qubit: int
    placements: Tuple[GatePlacement, ...]


@dataclass(frozen=True)
class RecursiveCircuit:
    n_qubits: int
    blocks: Tuple[LadderBlock, ...]
    swaps: Tuple[Tuple[int, int], ...] = ()

    def placements(self):
        for block in self.blocks:
            yield from block.placements


class GateCounts(NamedTuple):
    singles: int
    twos: int
    swaps: int

    @property
    def total(self):
        return self.singles + self.twos + self.swaps


def build_recursive_circuit(cfg, n, bit_reversal=False, label_offset=0):
    """
    Build the n-qubit ladder circuit determined by a gate-set configuration.

    Args:
        cfg: GateSetConfig
        n: number of qubits, >= 1
        bit_reversal: append swaps q <-> n+1-q
        label_offset: added to target/control labels when angles are evaluated

    Returns:
        RecursiveCircuit with n(n+1)/2 gate placements
    """
    if n < 1:
        raise InvalidArgumentError(f"qubit count must be >= 1, got {n}")
    single = realize_single_gate(cfg.single)
    blocks = []
    for q in range(1, n + 1):
        placements = [GatePlacement(q, single)]
        for r in range(q + 1, n + 1):
            local = realize_two_gate(cfg.two, q + label_offset, r + label_offset)
            placements.append(GatePlacement(q, local, control=r))
        blocks.append(LadderBlock(q, tuple(placements)))
    swaps = ()
    if bit_reversal:
        swaps = tuple((q, n + 1 - q) for q in range(1, n // 2 + 1))
    circuit = RecursiveCircuit(n, tuple(blocks), swaps)
    logger.debug(
        f"Built {n}-qubit ladder: {sum(len(b.placements) for b in blocks)} gates, "
        f"{len(swaps)} swaps"
    )
    return circuit


def gate_count(c):
    singles = len(c.blocks)
    twos = sum(len(block.placements) - 1 for block in c.blocks)
    return GateCounts(singles, twos, len(c.swaps))


def _apply_local(amplitudes, matrix, qubits, n):
    """Stream a 2^k x 2^k gate over the leading amplitude axis of a (2^n, ...) array."""
    trailing = amplitudes.shape[1:]
    k = len(qubits)
    axes = tuple(q - 1 for q in qubits)
    front = tuple(range(k))
    psi = np.moveaxis(amplitudes.reshape((2,) * n + trailing), axes, front)
    moved_shape = psi.shape
    psi = (matrix @ psi.reshape(1 << k, -1)).reshape(moved_shape)
    return np.moveaxis(psi, front, axes).reshape((1 << n,) + trailing)


def _apply_swap(amplitudes, a, b, n):
    trailing = amplitudes.shape[1:]
    psi = amplitudes.reshape((2,) * n + trailing)
    return np.swapaxes(psi, a - 1, b - 1).reshape((1 << n,) + trailing)


def _stream(c, amplitudes):
    for placement in c.placements():
        amplitudes = _apply_local(
            amplitudes, placement.local_matrix.entries, placement.qubits, c.n_qubits
        )
    for a, b in c.swaps:
        amplitudes = _apply_swap(amplitudes, a, b, c.n_qubits)
    return amplitudes


def apply_circuit(c, v, cap=STREAM_QUBIT_CAP):
    """
    Apply a ladder circuit to a state by gate streaming, O(n^2 2^n) work.

    Raises:
        DimensionMismatchError: if the state has a different qubit count
        CapExceededError: if n exceeds the streaming cap
    """
    if v.n_qubits != c.n_qubits:
        raise DimensionMismatchError(
            f"state has {v.n_qubits} qubits, circuit has {c.n_qubits}"
        )
    if c.n_qubits > cap:
        raise CapExceededError(c.n_qubits, cap)
    return StateVector(_stream(c, np.array(v.amplitudes)))


def realize_unitary(c, cap=DENSE_QUBIT_CAP, workers=1, block_columns=BLOCK_COLUMNS):
    """
    Dense unitary of a circuit; column k is the circuit applied to |k>.

    Columns are streamed in blocks, optionally on several threads. The
    result does not depend on the order in which blocks finish.

    Raises:
        CapExceededError: if n exceeds the dense realization cap
    """
    n = c.n_qubits
    if n > cap:
        raise CapExceededError(n, cap)
    dim = 1 << n
    result = np.empty((dim, dim), dtype=np.complex128)
    starts = range(0, dim, block_columns)

    def realize_block(start):
        stop = min(start + block_columns, dim)
        width = stop - start
        block = np.zeros((dim, width), dtype=np.complex128)
        block[np.arange(start, stop), np.arange(width)] = 1.0
        result[:, start:stop] = _stream(c, block)

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            list(executor.map(realize_block, starts))
    else:
        for start in starts:
            realize_block(start)
    logger.debug(f"Realized {dim}x{dim} unitary in {len(starts)} column blocks")
    return DenseMatrix(result)


def check_recursion_identity(cfg, n, cap=DENSE_QUBIT_CAP):
    """
    Max abs difference between U_n and (I (x) U_{n-1}) V_n.

    U_{n-1} is built as its own ladder with labels shifted by one, so angle
    schedules see the same qubit labels they have inside U_n.
    """
    if n < 2:
        raise InvalidArgumentError(f"recursion identity needs n >= 2, got {n}")
    if n > cap:
        raise CapExceededError(n, cap)
    full = build_recursive_circuit(cfg, n)
    sub = build_recursive_circuit(cfg, n - 1, label_offset=1)
    top_block = RecursiveCircuit(n, full.blocks[:1])
    u_n = realize_unitary(full, cap=cap)
    rhs = mat_mul(embed_identity(realize_unitary(sub, cap=cap)), realize_unitary(top_block, cap=cap))
    residual = max_abs_diff(u_n, rhs)
    logger.debug(f"Recursion identity residual at n={n}: {residual:.3e}")
    return residual
