"""
Numerical verification of the forward and reverse direction identities.

    qft            ladder circuit (H, CP(2*pi/2^d), bit reversal) vs. the QFT matrix
    recursion      U_n vs. (I (x) U_{n-1}) V_n for a gate set
    amatrix        tensor product of phase gates vs. the twiddle diagonal
    fft            radix-2 FFT vs. dense DFT matvec on a random signal
    dft-recursion  radix-2 matrix recursion vs. the dense unitary DFT
"""

import logging

import numpy as np
from django.conf import settings
from django.core.management.base import CommandError

from ladderlab.apps.core.circuit import (build_recursive_circuit,
                                         check_recursion_identity,
                                         realize_unitary)
from ladderlab.apps.core.exceptions import CapExceededError
from ladderlab.apps.core.management.base import (EXIT_VERIFY_FAILED,
                                                 LabCommand)
from ladderlab.apps.core.numerics import max_abs_diff, unitarity_residual
from ladderlab.apps.core.presets import QFT_PRESET, load_preset
from ladderlab.apps.core.serializers import format_report
from ladderlab.apps.core.transforms import (UNITARY_FORWARD, DftConvention,
                                            Normalization, Signal,
                                            a_matrix_tensor, dft_matrix,
                                            dft_recursion_build, fft_radix2,
                                            qft_reference_matrix,
                                            twiddle_diagonal)

logger = logging.getLogger(__name__)

TARGETS = ("qft", "recursion", "amatrix", "fft", "dft-recursion")
AMATRIX_TOL = 1e-13
DFT_RECURSION_TOL = 1e-11
FFT_TOL_PER_SAMPLE = 1e-9


class Command(LabCommand):
    help = "Verify a transform identity and print its residual"

    def add_arguments(self, parser):
        parser.add_argument("target", choices=TARGETS, help="Identity to verify")
        parser.add_argument("--qubits", type=int, default=4, help="Qubit count for qft/recursion/amatrix")
        parser.add_argument("--size", type=int, default=1024, help="Signal length N for fft/dft-recursion")
        self.add_gateset_arguments(parser)

    def handle(self, *args, **options):
        target = options["target"]
        with self.lab_errors():
            if target in ("fft", "dft-recursion"):
                self.require_positive("size", options["size"])
                pairs, residual, tolerance = getattr(self, f"verify_{target.replace('-', '_')}")(
                    options["size"]
                )
            else:
                self.require_positive("qubits", options["qubits"])
                pairs, residual, tolerance = getattr(self, f"verify_{target}")(
                    options["qubits"], options
                )
        passed = residual <= tolerance
        report = [("target", target)] + pairs + [
            ("residual", residual),
            ("tolerance", tolerance),
            ("status", "pass" if passed else "fail"),
        ]
        self.stdout.write(format_report(report), ending="")
        logger.info(f"verify {target}: residual {residual:.3e} (tolerance {tolerance:.1e})")
        if not passed:
            raise CommandError(
                f"{target} residual {residual:.3e} exceeds {tolerance:.1e}",
                returncode=EXIT_VERIFY_FAILED,
            )

    def require_dense_size(self, size):
        limit = 1 << settings.LADDERLAB_DENSE_QUBIT_CAP
        if size > limit:
            raise CapExceededError(size, limit, what="signal length")

    def verify_qft(self, n, options):
        circuit = build_recursive_circuit(load_preset(QFT_PRESET), n, bit_reversal=True)
        unitary = realize_unitary(circuit, cap=settings.LADDERLAB_DENSE_QUBIT_CAP)
        residual = max_abs_diff(unitary, qft_reference_matrix(n))
        pairs = [("qubits", n), ("unitarity_residual", unitarity_residual(unitary))]
        return pairs, residual, settings.LADDERLAB_ABS_TOL

    def verify_recursion(self, n, options):
        cfg = self.load_gateset(options, default=QFT_PRESET)
        residual = check_recursion_identity(cfg, n, cap=settings.LADDERLAB_DENSE_QUBIT_CAP)
        return [("qubits", n)], residual, settings.LADDERLAB_ABS_TOL

    def verify_amatrix(self, n, options):
        if n > settings.LADDERLAB_DENSE_QUBIT_CAP:
            raise CapExceededError(n, settings.LADDERLAB_DENSE_QUBIT_CAP)
        conv = DftConvention(-1, Normalization.NONE)
        residual = max_abs_diff(a_matrix_tensor(n, conv), twiddle_diagonal(1 << n, conv))
        return [("qubits", n)], residual, AMATRIX_TOL

    def verify_fft(self, size):
        self.require_dense_size(size)
        conv = DftConvention(-1, Normalization.NONE)
        rng = np.random.default_rng(settings.LADDERLAB_RANDOM_SEED)
        signal = Signal(rng.normal(size=size) + 1j * rng.normal(size=size))
        fast = fft_radix2(signal, conv).samples
        dense = dft_matrix(size, conv).entries @ signal.samples
        residual = float(np.max(np.abs(fast - dense)))
        return [("size", size)], residual, FFT_TOL_PER_SAMPLE * size

    def verify_dft_recursion(self, size):
        self.require_dense_size(size)
        residual = max_abs_diff(dft_recursion_build(size), dft_matrix(size, UNITARY_FORWARD))
        return [("size", size)], residual, DFT_RECURSION_TOL
