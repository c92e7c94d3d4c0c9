"""
Analysis of realized transforms: sparsity, global-phase equivalence, gate
complexity, matrix norms and desk-scale timing.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from .circuit import (DENSE_QUBIT_CAP, STREAM_QUBIT_CAP, apply_circuit,
                      build_recursive_circuit, gate_count, realize_unitary)
from .exceptions import InvalidArgumentError
from .numerics import (StateVector, Tolerance, apply_to_vector,
                       require_same_dim)
from .presets import QFT_PRESET, load_preset
from .transforms import DftConvention, Normalization, Signal, fft_radix2

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    FULLY_DENSE = "fully-dense"
    DENSE = "dense"
    SPARSE = "sparse"
    GENERALIZED_PERMUTATION = "generalized-permutation"
    DIAGONAL = "diagonal"

    @property
    def is_non_sparse(self):
        return self in (Verdict.FULLY_DENSE, Verdict.DENSE)


@dataclass(frozen=True)
class SparsityReport:
    dim: int
    nnz: int
    density: float
    min_nonzero_magnitude: float
    max_magnitude: float
    verdict: Verdict

    @property
    def discrepancy(self):
        """True when a transform expected to be non-sparse is not."""
        return not self.verdict.is_non_sparse

    def items(self):
        return [
            ("dim", self.dim),
            ("nnz", self.nnz),
            ("density", self.density),
            ("min_nonzero_magnitude", self.min_nonzero_magnitude),
            ("max_magnitude", self.max_magnitude),
            ("verdict", self.verdict.value),
        ]


@dataclass(frozen=True)
class EquivalenceReport:
    equal_up_to_global_phase: bool
    best_phase: float
    residual: float


@dataclass(frozen=True)
class AuditRow:
    n: int
    singles: int
    twos: int
    swaps: int

    @property
    def total(self):
        return self.singles + self.twos + self.swaps

    def matches_formula(self, bit_reversal):
        expected_swaps = self.n // 2 if bit_reversal else 0
        return (
            self.singles == self.n
            and self.twos == self.n * (self.n - 1) // 2
            and self.swaps == expected_swaps
        )


@dataclass(frozen=True)
class ComplexityAudit:
    rows: Tuple[AuditRow, ...]
    exact_match: bool

    def totals(self):
        return np.array([row.total for row in self.rows])

    def second_differences(self):
        return np.diff(self.totals(), n=2)


@dataclass(frozen=True)
class NormReport:
    entrywise_l1: float
    max_column_sum: float
    max_row_sum: float
    frobenius: float

    def items(self):
        return [
            ("entrywise_l1", self.entrywise_l1),
            ("max_column_sum", self.max_column_sum),
            ("max_row_sum", self.max_row_sum),
            ("frobenius", self.frobenius),
        ]


@dataclass(frozen=True)
class BenchReport:
    n_qubits: int
    trials: int
    streamed_median_s: float
    dense_median_s: float
    agreement: float
    fft_median_s: Optional[float] = None
    fft_agreement: Optional[float] = None

    def items(self):
        pairs = [
            ("n_qubits", self.n_qubits),
            ("trials", self.trials),
            ("streamed_median_s", self.streamed_median_s),
            ("dense_median_s", self.dense_median_s),
        ]
        if self.fft_median_s is not None:
            pairs.append(("fft_median_s", self.fft_median_s))
        pairs.append(("agreement", self.agreement))
        if self.fft_agreement is not None:
            pairs.append(("fft_agreement", self.fft_agreement))
        return pairs


@dataclass(frozen=True)
class SurveyRow:
    preset: str
    n_qubits: int
    report: SparsityReport


def sparsity_report(m, tol=Tolerance()):
    """
    Count entries above zero_tol and classify the matrix.

    Verdicts are tried in the order diagonal, generalized-permutation,
    fully-dense, dense (density >= 0.5), sparse.
    """
    magnitudes = np.abs(m.entries)
    mask = magnitudes > tol.zero_tol
    nnz = int(np.count_nonzero(mask))
    dim = m.dim
    density = nnz / dim**2
    if not np.any(mask & ~np.eye(dim, dtype=bool)):
        verdict = Verdict.DIAGONAL
    elif (
        nnz == dim
        and np.all(mask.sum(axis=0) == 1)
        and np.all(mask.sum(axis=1) == 1)
    ):
        verdict = Verdict.GENERALIZED_PERMUTATION
    elif nnz == dim**2:
        verdict = Verdict.FULLY_DENSE
    elif density >= 0.5:
        verdict = Verdict.DENSE
    else:
        verdict = Verdict.SPARSE
    min_nonzero = float(magnitudes[mask].min()) if nnz else 0.0
    return SparsityReport(
        dim=dim,
        nnz=nnz,
        density=density,
        min_nonzero_magnitude=min_nonzero,
        max_magnitude=float(magnitudes.max()),
        verdict=verdict,
    )


def equivalent_up_to_global_phase(u, v, tol=Tolerance()):
    """
    Align v to u by the phase of u's largest-magnitude entry and report the
    remaining difference.
    """
    require_same_dim(u, v)
    index = np.unravel_index(np.argmax(np.abs(u.entries)), u.entries.shape)
    anchor = v.entries[index]
    if abs(anchor) <= tol.zero_tol:
        residual = float(np.max(np.abs(u.entries - v.entries)))
        return EquivalenceReport(False, 0.0, residual)
    phase = float(np.angle(u.entries[index] / anchor))
    if phase <= -np.pi:
        phase = np.pi
    residual = float(np.max(np.abs(u.entries - np.exp(1j * phase) * v.entries)))
    return EquivalenceReport(residual <= tol.abs_tol, phase, residual)


def complexity_audit(cfg, n_range, bit_reversal=False):
    """Build the ladder for every n and compare counts to n + n(n-1)/2 (+ n//2 swaps)."""
    qubit_counts = list(n_range)
    if not qubit_counts:
        raise InvalidArgumentError("complexity audit needs at least one qubit count")
    rows = []
    for n in qubit_counts:
        counts = gate_count(build_recursive_circuit(cfg, n, bit_reversal=bit_reversal))
        rows.append(AuditRow(n, counts.singles, counts.twos, counts.swaps))
    exact = all(row.matches_formula(bit_reversal) for row in rows)
    if not exact:
        logger.warning("Gate counts deviate from the ladder formula")
    return ComplexityAudit(tuple(rows), exact)


def norm_report(m):
    magnitudes = np.abs(m.entries)
    return NormReport(
        entrywise_l1=float(magnitudes.sum()),
        max_column_sum=float(magnitudes.sum(axis=0).max()),
        max_row_sum=float(magnitudes.sum(axis=1).max()),
        frobenius=float(np.sqrt(np.sum(magnitudes**2))),
    )


def _median_seconds(run, trials):
    timings = []
    result = None
    for _ in range(trials):
        started = time.perf_counter()
        result = run()
        timings.append(time.perf_counter() - started)
    return float(np.median(timings)), result


def bench_apply(cfg, n, trials, cap=DENSE_QUBIT_CAP, seed=0, stream_cap=STREAM_QUBIT_CAP):
    """
    Median wall time of gate-streamed application vs. dense matvec.

    For the QFT gate set the circuit includes bit reversal and the radix-2
    FFT (positive exponent, unitary) is timed and compared as well.
    """
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    is_qft = cfg == load_preset(QFT_PRESET)
    circuit = build_recursive_circuit(cfg, n, bit_reversal=is_qft)
    dense = realize_unitary(circuit, cap=cap)
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    state = StateVector(amplitudes / np.linalg.norm(amplitudes))

    streamed_s, streamed = _median_seconds(lambda: apply_circuit(circuit, state, cap=stream_cap), trials)
    dense_s, direct = _median_seconds(lambda: apply_to_vector(dense, state), trials)
    agreement = float(np.max(np.abs(streamed.amplitudes - direct.amplitudes)))
    fft_s = fft_agreement = None
    if is_qft:
        conv = DftConvention(1, Normalization.UNITARY)
        signal = Signal(state.amplitudes)
        fft_s, transformed = _median_seconds(lambda: fft_radix2(signal, conv), trials)
        fft_agreement = float(np.max(np.abs(transformed.samples - streamed.amplitudes)))
    report = BenchReport(n, trials, streamed_s, dense_s, agreement, fft_s, fft_agreement)
    logger.info(f"Benchmark n={n}: streamed {streamed_s:.3e}s, dense {dense_s:.3e}s")
    return report


def sparsity_survey(presets, qubit_counts, tol=Tolerance(), cap=DENSE_QUBIT_CAP):
    """Realize each named gate set at each size and measure its sparsity."""
    rows = []
    for name in presets:
        cfg = load_preset(name)
        for n in qubit_counts:
            report = sparsity_report(realize_unitary(build_recursive_circuit(cfg, n), cap=cap), tol)
            if report.discrepancy:
                logger.warning(
                    f"{name} at n={n} measured {report.verdict.value} "
                    f"({report.nnz} nonzeros), expected non-sparse"
                )
            rows.append(SurveyRow(name, n, report))
    return rows

