from io import StringIO
from pathlib import Path
from tempfile import TemporaryDirectory

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from ladderlab.apps.core.serializers import load_matrix


GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


def report(text):
    return dict(line.split(" = ", 1) for line in text.splitlines() if " = " in line)


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self._tmp = TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            run(*args)
        self.assertEqual(ctx.exception.returncode, code)


class SynthCommandTests(CommandTestCase):
    def test_single_qubit_qft_is_hadamard(self):
        text = run("synth", "--preset", "qft", "--qubits", "1", "--bit-reversal")
        self.assertTrue(text.startswith("N 2\n0.70710678118654746,0"))

    def test_diagonal_gate_set_has_zero_off_diagonal(self):
        matrix = load_matrix(run("synth", "--preset", "t-zz", "--qubits", "4"))
        off_diagonal = matrix.entries[~np.eye(16, dtype=bool)]
        self.assertTrue(np.all(off_diagonal == 0))

    def test_output_is_deterministic(self):
        first, second = self.tmp / "a.mat", self.tmp / "b.mat"
        run("synth", "--preset", "h-cx-cp", "--qubits", "8", "--out", str(first))
        run("synth", "--preset", "h-cx-cp", "--qubits", "8", "--out", str(second))
        lines = first.read_text().splitlines()
        self.assertEqual(len(lines), 257)
        self.assertEqual(first.read_bytes(), second.read_bytes())

    def test_config_file(self):
        config = self.tmp / "qft.gates"
        config.write_text("single: H\ntwo: CP(2*pi/2^d)\n")
        text = run("synth", "--config", str(config), "--qubits", "2")
        self.assertEqual(load_matrix(text).dim, 4)

    def test_parse_error_exit_code(self):
        config = self.tmp / "bad.gates"
        config.write_text("single: H\ntwo: CP(2*pi/2^x)\n")
        self.assertExitCode(2, "synth", "--config", str(config), "--qubits", "2")

    def test_missing_config_file(self):
        self.assertExitCode(2, "synth", "--config", str(self.tmp / "none.gates"), "--qubits", "2")

    def test_gateset_required(self):
        self.assertExitCode(2, "synth", "--qubits", "2")

    @override_settings(LADDERLAB_DENSE_QUBIT_CAP=3)
    def test_cap_exit_code(self):
        self.assertExitCode(3, "synth", "--preset", "qft", "--qubits", "4")


class RenderCommandTests(CommandTestCase):
    def test_render_is_deterministic(self):
        matrix = self.tmp / "u.mat"
        run("synth", "--preset", "h-cx-cp", "--qubits", "8", "--out", str(matrix))
        first, second = self.tmp / "a.pgm", self.tmp / "b.pgm"
        run("render", str(matrix), "--part", "real", "--out", str(first))
        run("render", str(matrix), "--part", "real", "--out", str(second))
        data = first.read_bytes()
        self.assertTrue(data.startswith(b"P5\n256 256\n255\n"))
        self.assertEqual(len(data), len(b"P5\n256 256\n255\n") + 256 * 256)
        self.assertEqual(data, second.read_bytes())

    def test_matches_golden_heatmap(self):
        matrix = self.tmp / "u.mat"
        image = self.tmp / "u.pgm"
        run("synth", "--preset", "h-cx-cp", "--qubits", "8", "--out", str(matrix))
        run("render", str(matrix), "--part", "real", "--out", str(image))
        golden = (GOLDEN_DIR / "h-cx-cp-n8-real.pgm").read_bytes()
        self.assertEqual(image.read_bytes(), golden)

    def test_hadamard_pixels(self):
        matrix = self.tmp / "h.mat"
        run("synth", "--preset", "qft", "--qubits", "1", "--out", str(matrix))
        image = self.tmp / "h.pgm"
        run("render", str(matrix), "--out", str(image))
        self.assertEqual(image.read_bytes(), b"P5\n2 2\n255\n\xff\xff\xff\x00")

    def test_malformed_matrix(self):
        matrix = self.tmp / "bad.mat"
        matrix.write_text("N 2\n1,0\n")
        self.assertExitCode(2, "render", str(matrix), "--out", str(self.tmp / "x.pgm"))


class AnalyzeCommandTests(CommandTestCase):
    def write_matrix(self, *args):
        path = self.tmp / "u.mat"
        run("synth", *args, "--out", str(path))
        return str(path)

    def test_identity(self):
        path = self.tmp / "eye.mat"
        path.write_text("N 4\n" + "".join(
            " ".join("1,0" if r == c else "0,0" for c in range(4)) + "\n" for r in range(4)
        ))
        result = report(run("analyze", str(path)))
        self.assertEqual(result["verdict"], "diagonal")
        self.assertEqual(result["nnz"], "4")
        self.assertIn("discrepancy", result)

    def test_fully_dense_gate_set(self):
        result = report(run("analyze", self.write_matrix("--preset", "h-cx-cp", "--qubits", "4")))
        self.assertEqual(result["density"], "1")
        self.assertEqual(result["verdict"], "fully-dense")
        self.assertNotIn("discrepancy", result)

    def test_permutation_gate_set_flags_discrepancy(self):
        result = report(run("analyze", self.write_matrix("--preset", "t-cx", "--qubits", "4")))
        self.assertEqual(result["verdict"], "generalized-permutation")
        self.assertEqual(result["nnz"], "16")
        self.assertIn("non-sparse", result["discrepancy"])

    def test_zero_tol_is_reported(self):
        result = report(run("analyze", self.write_matrix("--preset", "qft", "--qubits", "2"), "--zero-tol", "0.75"))
        self.assertEqual(result["zero_tol"], "0.75")
        self.assertEqual(result["nnz"], "0")


class VerifyCommandTests(CommandTestCase):
    def test_targets_pass(self):
        for args in (
            ("qft", "--qubits", "4"),
            ("amatrix", "--qubits", "6"),
            ("fft", "--size", "1024"),
            ("dft-recursion", "--size", "256"),
            ("recursion", "--preset", "h-xx-zz", "--qubits", "4"),
        ):
            result = report(run("verify", *args))
            self.assertEqual(result["status"], "pass", args)
            self.assertLessEqual(float(result["residual"]), float(result["tolerance"]))

    def test_tolerances(self):
        self.assertEqual(float(report(run("verify", "amatrix", "--qubits", "6"))["tolerance"]), 1e-13)
        self.assertEqual(float(report(run("verify", "fft", "--size", "1024"))["tolerance"]), 1e-9 * 1024)

    @override_settings(LADDERLAB_ABS_TOL=-1.0)
    def test_failure_exit_code(self):
        self.assertExitCode(1, "verify", "qft", "--qubits", "3")

    def test_non_power_of_two_size(self):
        self.assertExitCode(2, "verify", "fft", "--size", "12")


class FftCommandTests(CommandTestCase):
    def write_signal(self, values):
        path = self.tmp / "x.sig"
        path.write_text("".join(f"{float(v.real)!r},{float(v.imag)!r}\n" for v in values))
        return str(path)

    def read_signal(self, text):
        return np.array([complex(*map(float, line.split(","))) for line in text.splitlines()])

    def test_impulse(self):
        out = run("fft", self.write_signal([1, 0, 0, 0, 0, 0, 0, 0]))
        np.testing.assert_allclose(self.read_signal(out), np.ones(8))

    def test_constant(self):
        out = self.tmp / "y.sig"
        run("fft", self.write_signal([1] * 8), "--out", str(out))
        expected = np.zeros(8)
        expected[0] = 8
        np.testing.assert_allclose(self.read_signal(out.read_text()), expected, atol=1e-12)

    def test_random_signal_matches_dense(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=64) + 1j * rng.normal(size=64)
        out = run("fft", self.write_signal(x), "--sign", "plus", "--norm", "unitary")
        k = np.arange(64)
        dense = np.exp(2j * np.pi * np.outer(k, k) / 64) @ x / 8
        self.assertLessEqual(np.max(np.abs(self.read_signal(out) - dense)), 1e-10)

    def test_non_power_of_two(self):
        self.assertExitCode(2, "fft", self.write_signal([1, 2, 3]))


class BenchCommandTests(CommandTestCase):
    def test_qft_report(self):
        result = report(run("bench", "--preset", "qft", "--qubits", "8", "--trials", "5"))
        for key in ("streamed_median_s", "dense_median_s", "fft_median_s"):
            self.assertIn(key, result)
        self.assertLessEqual(float(result["agreement"]), 1e-10)

    @override_settings(LADDERLAB_STREAM_QUBIT_CAP=2)
    def test_stream_cap_setting(self):
        self.assertExitCode(3, "bench", "--preset", "t-zz", "--qubits", "3", "--trials", "1")

    def test_zero_trials(self):
        self.assertExitCode(2, "bench", "--preset", "qft", "--qubits", "3", "--trials", "0")


class SurveyCommandTests(CommandTestCase):
    def test_blocks_per_cell(self):
        text = run("survey", "--presets", "t-zz", "h-cx-cp", "--qubits", "4")
        blocks = [report(block) for block in text.split("\n\n")]
        self.assertEqual([(b["preset"], b["qubits"]) for b in blocks], [("t-zz", "4"), ("h-cx-cp", "4")])
        self.assertEqual([b["discrepancy"] for b in blocks], ["true", "false"])


class FiguresCommandTests(CommandTestCase):
    def test_writes_series(self):
        run("figures", "--out", str(self.tmp), "--max-qubits", "6")
        names = sorted(path.name for path in self.tmp.glob("*.pgm"))
        self.assertEqual(names, [
            "h-cx-cp-n4-real.pgm", "h-cx-cp-n6-real.pgm", "h-cx-n4-real.pgm", "h-cx-n6-real.pgm",
        ])
        self.assertTrue((self.tmp / "h-cx-n6-real.pgm").read_bytes().startswith(b"P5\n64 64\n255\n"))
