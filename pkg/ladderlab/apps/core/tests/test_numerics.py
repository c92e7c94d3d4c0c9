import numpy as np
from django.test import SimpleTestCase

from ladderlab.apps.core.exceptions import (DimensionMismatchError,
                                            InvalidArgumentError)
from ladderlab.apps.core.gates import HADAMARD, PAULI_X
from ladderlab.apps.core.numerics import (DenseMatrix, StateVector, Tolerance,
                                          apply_to_vector, basis_state,
                                          embed_identity, identity, is_unitary,
                                          mat_adjoint, mat_mul, mat_tensor,
                                          max_abs_diff, unitarity_residual)


class DenseMatrixTests(SimpleTestCase):
    def test_rejects_non_square(self):
        with self.assertRaises(InvalidArgumentError):
            DenseMatrix(np.zeros((2, 3)))

    def test_rejects_nan(self):
        with self.assertRaises(InvalidArgumentError):
            DenseMatrix(np.array([[np.nan, 0], [0, 1]]))

    def test_entries_are_read_only(self):
        m = identity(2)
        with self.assertRaises(ValueError):
            m.entries[0, 0] = 5

    def test_state_vector_length_must_be_power_of_two(self):
        with self.assertRaises(InvalidArgumentError):
            StateVector(np.ones(3))
        self.assertEqual(StateVector(np.ones(8)).n_qubits, 3)

    def test_negative_tolerance_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            Tolerance(zero_tol=-1.0)


class AlgebraTests(SimpleTestCase):
    def test_hadamard_squares_to_identity(self):
        h = DenseMatrix(HADAMARD)
        self.assertLessEqual(max_abs_diff(mat_mul(h, h), identity(2)), 1e-15)

    def test_tensor_puts_first_factor_in_high_bit(self):
        x = DenseMatrix(PAULI_X)
        xi = mat_tensor(x, identity(2))
        # X on qubit 1 maps |00> to |10>
        result = apply_to_vector(xi, basis_state(2, 0))
        np.testing.assert_array_equal(result.amplitudes, basis_state(2, 2).amplitudes)

    def test_embed_identity_acts_on_lower_qubits(self):
        x = DenseMatrix(PAULI_X)
        result = apply_to_vector(embed_identity(x), basis_state(2, 2))
        np.testing.assert_array_equal(result.amplitudes, basis_state(2, 3).amplitudes)

    def test_adjoint_of_random_unitary_is_inverse(self):
        rng = np.random.default_rng(7)
        q, _ = np.linalg.qr(rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
        u = DenseMatrix(q)
        self.assertLessEqual(max_abs_diff(mat_mul(u, mat_adjoint(u)), identity(8)), 1e-12)
        self.assertTrue(is_unitary(u))

    def test_unitarity_residual_of_scaled_identity(self):
        self.assertAlmostEqual(unitarity_residual(DenseMatrix(2 * np.eye(4))), 3.0)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            mat_mul(identity(2), identity(4))
        with self.assertRaises(DimensionMismatchError):
            max_abs_diff(identity(2), identity(4))
        with self.assertRaises(DimensionMismatchError):
            apply_to_vector(identity(2), basis_state(2, 0))

    def test_basis_state_range(self):
        with self.assertRaises(InvalidArgumentError):
            basis_state(2, 4)


def random_matrix(rng, dim):
    return DenseMatrix(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))


def random_state(rng, dim):
    return StateVector(rng.normal(size=dim) + 1j * rng.normal(size=dim))


class AlgebraPropertyTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(20240601)

    def test_tensor_is_associative(self):
        for dims in ((1, 2, 4), (2, 2, 2), (2, 4, 8), (8, 2, 1)):
            a, b, c = (random_matrix(self.rng, d) for d in dims)
            left = mat_tensor(mat_tensor(a, b), c)
            right = mat_tensor(a, mat_tensor(b, c))
            self.assertLessEqual(max_abs_diff(left, right), 1e-12, dims)

    def test_product_applies_right_factor_first(self):
        for dim in (2, 8, 64):
            a, b = random_matrix(self.rng, dim), random_matrix(self.rng, dim)
            v = random_state(self.rng, dim)
            together = apply_to_vector(mat_mul(a, b), v).amplitudes
            in_turn = apply_to_vector(a, apply_to_vector(b, v)).amplitudes
            scale = max(1.0, float(np.max(np.abs(together))))
            self.assertLessEqual(np.max(np.abs(together - in_turn)) / scale, 1e-12, dim)

    def test_product_matches_loops(self):
        a, b = random_matrix(self.rng, 5), random_matrix(self.rng, 5)
        expected = np.zeros((5, 5), dtype=np.complex128)
        for i in range(5):
            for j in range(5):
                for k in range(5):
                    expected[i, j] += a.entries[i, k] * b.entries[k, j]
        np.testing.assert_allclose(mat_mul(a, b).entries, expected, atol=1e-12)

    def test_matvec_matches_loops(self):
        a, v = random_matrix(self.rng, 8), random_state(self.rng, 8)
        expected = np.zeros(8, dtype=np.complex128)
        for i in range(8):
            for k in range(8):
                expected[i] += a.entries[i, k] * v.amplitudes[k]
        np.testing.assert_allclose(apply_to_vector(a, v).amplitudes, expected, atol=1e-12)

    def test_adjoint_is_an_involution(self):
        m = random_matrix(self.rng, 6)
        np.testing.assert_array_equal(mat_adjoint(mat_adjoint(m)).entries, m.entries)
