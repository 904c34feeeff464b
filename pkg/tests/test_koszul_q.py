"""
Koszul correction matrix Q.

Run: python -m unittest tests.test_koszul_q
"""

import unittest

import numpy as np

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.disk_core import AnalyticPoly
from wolffd.engines.koszul_q import q_adjoint_apply, q_apply, q_derivative, q_matrix, q_of_F, q_pairs
from wolffd.engines.multiplier_ops import MultiplierTuple

Z = AnalyticPoly.monomial(1)


class TestQMatrix(unittest.TestCase):
    def test_pairs_are_lexicographic(self):
        self.assertEqual(q_pairs(3), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(q_pairs(1), [])

    def test_small_examples(self):
        np.testing.assert_allclose(q_matrix([1, 0]), [[0], [-1]])
        Q = q_matrix([1, 2])
        np.testing.assert_allclose(Q, [[2], [-1]])
        np.testing.assert_allclose(Q @ Q.conj().T, [[4, -2], [-2, 1]])
        self.assertEqual(q_matrix([3.0]).shape, (1, 0))

    def test_identities_on_random_rows(self):
        rng = np.random.default_rng(5)
        for n in (2, 3, 7, 20):
            C = rng.normal(size=n) + 1j * rng.normal(size=n)
            Q = q_matrix(C)
            self.assertEqual(Q.shape, (n, n * (n - 1) // 2))
            expected = np.vdot(C, C).real * np.eye(n) - np.outer(C.conj(), C)
            np.testing.assert_allclose(Q @ Q.conj().T, expected, atol=1e-12)
            np.testing.assert_allclose(C @ Q, 0.0, atol=1e-12)
            self.assertEqual(np.linalg.matrix_rank(Q), n - 1)

    def test_empty_row(self):
        with self.assertRaises(ArgumentError):
            q_matrix([])


class TestQOfF(unittest.TestCase):
    def test_evaluation(self):
        F = MultiplierTuple.of(Z, AnalyticPoly.constant(1.0))
        np.testing.assert_allclose(q_of_F(F, 0.0), [[1], [0]])
        G = MultiplierTuple.of(Z.scale(0.5), AnalyticPoly.constant(0.5))
        np.testing.assert_allclose(q_of_F(G, 1j), [[0.5], [-0.5j]])

    def test_vectorized_shape(self):
        F = MultiplierTuple.of(Z, AnalyticPoly.constant(1.0), Z.scale(2.0))
        z = np.zeros((4, 5))
        self.assertEqual(q_of_F(F, z).shape, (4, 5, 3, 3))

    def test_derivative(self):
        F = MultiplierTuple.of(Z, AnalyticPoly.constant(1.0))
        np.testing.assert_allclose(q_derivative(F, 0.3), [[0], [-1]])
        G = MultiplierTuple.of(AnalyticPoly.monomial(2), Z)
        np.testing.assert_allclose(q_derivative(G, 1.0), [[1], [-2]])

    def test_derivative_matches_differences(self):
        F = MultiplierTuple.of(AnalyticPoly.from_list([0.1, 0.2, 0.3]), AnalyticPoly.from_list([1j, 0, -0.5]),
                               AnalyticPoly.monomial(3, 0.25))
        z, h = 0.2 + 0.1j, 1e-6
        numeric = (q_of_F(F, z + h) - q_of_F(F, z - h)) / (2 * h)
        np.testing.assert_allclose(q_derivative(F, z), numeric, atol=1e-8)

    def test_outside_closed_disk(self):
        with self.assertRaises(ArgumentError):
            q_of_F(MultiplierTuple.of(Z, Z), 1.5)


class TestApply(unittest.TestCase):
    def test_adjoint_pairs_with_apply(self):
        rng = np.random.default_rng(2)
        Q = q_matrix(rng.normal(size=4) + 1j * rng.normal(size=4))
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        w = rng.normal(size=6) + 1j * rng.normal(size=6)
        self.assertAlmostEqual(np.vdot(q_apply(Q, w), v), np.vdot(w, q_adjoint_apply(Q, v)), places=12)

    def test_stacked_application(self):
        Q = np.stack([q_matrix([1, 2]), q_matrix([0, 1j])])
        w = np.array([[1.0], [2.0]])
        np.testing.assert_allclose(q_apply(Q, w), [[2, -1], [2j, 0]])


if __name__ == "__main__":
    unittest.main()
