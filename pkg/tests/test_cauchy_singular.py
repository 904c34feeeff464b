"""
Cauchy transform, Beurling derivative, the operator T and its radial pieces.

Run: python -m unittest tests.test_cauchy_singular
"""

import unittest

import numpy as np

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.cauchy_singular import (
    MonomialExpansion,
    T_apply,
    T_apply_quad,
    T_l_apply,
    T_l_matrix,
    T_l_norm_estimate,
    beurling_derivative,
    cauchy_transform,
    cauchy_transform_quad,
    dbar_defect,
    fit_monomial_expansion,
    rotation_decompose,
    rotation_identity_defect,
    rotation_transform,
    schur_certificate,
    schur_norm_bound,
)
from wolffd.engines.disk_core import integrate_disk, make_polar_grid

ONE = MonomialExpansion.monomial(0, 0)
U = MonomialExpansion.monomial(1, 0)
UBAR = MonomialExpansion.monomial(0, 1)


def _random_expansion(rng, degree=3, count=5):
    terms = {}
    for _ in range(count):
        n, m = (int(x) for x in rng.integers(0, degree + 1, size=2))
        terms[(n, m)] = complex(rng.normal(), rng.normal())
    return MonomialExpansion(terms)


class TestCauchyTransform(unittest.TestCase):
    def test_closed_forms(self):
        z = 0.3 - 0.4j
        self.assertAlmostEqual(cauchy_transform(ONE, z), np.conj(z))
        self.assertAlmostEqual(cauchy_transform(UBAR, z), np.conj(z) ** 2 / 2)
        self.assertAlmostEqual(cauchy_transform(U, z), abs(z) ** 2 - 1)

    def test_vectorized_and_scalar(self):
        z = np.array([0.0, 0.5j])
        out = cauchy_transform(ONE, z)
        self.assertEqual(out.shape, (2,))
        self.assertIsInstance(cauchy_transform(ONE, 0.1), complex)

    def test_dbar_inverts_the_transform(self):
        rng = np.random.default_rng(0)
        w = _random_expansion(rng)
        for z in (0.0, 0.5 + 0.2j, -0.7j):
            self.assertLess(dbar_defect(w, z), 1e-6)

    def test_matches_quadrature(self):
        w = MonomialExpansion({(2, 1): 1.0, (0, 3): -0.5j})
        z = 0.4 - 0.3j
        self.assertAlmostEqual(abs(cauchy_transform_quad(w, z) - cauchy_transform(w, z)), 0.0, places=6)

    def test_beurling_derivative(self):
        z = 0.2 + 0.6j
        self.assertAlmostEqual(beurling_derivative(ONE, z), 0.0)
        self.assertAlmostEqual(beurling_derivative(U, z), np.conj(z))
        self.assertAlmostEqual(beurling_derivative(UBAR, z), 0.0)
        w = MonomialExpansion({(3, 0): 1.0, (2, 2): 0.5, (1, 3): 1j})
        h = 1e-5
        dx = (cauchy_transform(w, z + h) - cauchy_transform(w, z - h)) / (2 * h)
        dy = (cauchy_transform(w, z + 1j * h) - cauchy_transform(w, z - 1j * h)) / (2 * h)
        self.assertAlmostEqual(abs(beurling_derivative(w, z) - 0.5 * (dx - 1j * dy)), 0.0, places=7)
        with self.assertRaises(ArgumentError):
            beurling_derivative(U, 1.0)


class TestSingularOperator(unittest.TestCase):
    def test_closed_forms(self):
        lam = 0.3 + 0.2j
        self.assertEqual(T_apply(ONE, lam), 0)
        self.assertAlmostEqual(T_apply(U, lam), np.pi)
        self.assertAlmostEqual(T_apply(MonomialExpansion.monomial(2, 0), lam), np.pi * lam)
        self.assertEqual(T_apply(MonomialExpansion.monomial(0, 4), lam), 0)

    def test_matches_quadrature(self):
        lam = 0.3 + 0.2j
        for f in (MonomialExpansion.monomial(2, 0), MonomialExpansion({(1, 1): 1.0, (0, 2): 2.0, (3, 1): -1j})):
            self.assertAlmostEqual(abs(T_apply_quad(f, lam) - T_apply(f, lam)), 0.0, places=6)

    def test_rejects_boundary(self):
        with self.assertRaises(ArgumentError):
            T_apply(U, 1.0)


class TestRotations(unittest.TestCase):
    def test_decomposition(self):
        (p,) = rotation_decompose(U)
        self.assertEqual((p.l, list(p.powers)), (1, [1.0]))
        (p,) = rotation_decompose(UBAR)
        self.assertEqual(p.l, -1)
        (p,) = rotation_decompose(MonomialExpansion.monomial(1, 1))
        self.assertEqual((p.l, list(p.powers)), (0, [2.0]))

    def test_area_norm(self):
        self.assertAlmostEqual(MonomialExpansion.monomial(2, 1).area_norm_sq(), np.pi / 4)
        rng = np.random.default_rng(4)
        w = _random_expansion(rng)
        grid = make_polar_grid(16, 32)
        quad = np.real(integrate_disk(np.abs(w(grid.nodes)) ** 2, grid))
        self.assertAlmostEqual(w.area_norm_sq(), quad, places=10)

    def test_radial_operator_values(self):
        for s in (0.2, 0.5, 0.9):
            self.assertAlmostEqual(abs(T_l_apply(0, lambda r: np.ones_like(r), s)), 0.0, places=12)
        self.assertAlmostEqual(T_l_apply(1, lambda r: r, 0.5), 0.5, places=12)
        self.assertAlmostEqual(abs(T_l_apply(1, lambda r: 0.0 * r, 0.5)), 0.0)
        out = T_l_apply(2, lambda r: r ** 2, np.array([0.1, 0.4]))
        self.assertEqual(out.shape, (2,))

    def test_radial_operator_domain(self):
        for s in (0.0, 1.0, -0.5):
            with self.assertRaises(ArgumentError):
                T_l_apply(1, lambda r: r, s)

    def test_identity_on_grid(self):
        grid = make_polar_grid(12, 24)
        for f in (ONE, U, UBAR, MonomialExpansion({(3, 1): 1.0, (0, 2): -2.0, (2, 2): 0.5j})):
            self.assertLess(rotation_identity_defect(f, grid), 1e-10)


class TestRotationTransform(unittest.TestCase):
    radii = np.array([0.1, 0.45, 0.8])
    angles = np.array([-2.0, 0.3, 1.7])

    def _points(self):
        return self.radii[:, None] * np.exp(1j * self.angles)[None, :]

    def test_constant_gives_conjugate(self):
        out = rotation_transform(lambda z: np.ones_like(z), self.radii, self.angles)
        np.testing.assert_allclose(out, np.conj(self._points()), atol=1e-12)

    def test_agrees_with_closed_forms(self):
        rng = np.random.default_rng(9)
        w = _random_expansion(rng)
        z = self._points()
        np.testing.assert_allclose(rotation_transform(w, self.radii, self.angles, "cauchy"),
                                   cauchy_transform(w, z), atol=1e-9)
        np.testing.assert_allclose(rotation_transform(w, self.radii, self.angles, "dz"),
                                   beurling_derivative(w, z), atol=1e-9)
        np.testing.assert_allclose(rotation_transform(w, self.radii, self.angles, "T"),
                                   T_apply(w, z), atol=1e-9)

    def test_component_axes_and_threads(self):
        def pair(z):
            return np.stack([np.ones_like(z), z], axis=-1)

        radii = np.linspace(0.05, 0.95, 40)
        serial = rotation_transform(pair, radii, self.angles)
        threaded = rotation_transform(pair, radii, self.angles, threads=3)
        self.assertEqual(serial.shape, (40, 3, 2))
        np.testing.assert_allclose(serial, threaded)
        z = radii[:, None] * np.exp(1j * self.angles)[None, :]
        np.testing.assert_allclose(serial[..., 1], np.abs(z) ** 2 - 1, atol=1e-12)

    def test_boundary_radius(self):
        out = rotation_transform(lambda z: np.ones_like(z), [1.0], self.angles)
        np.testing.assert_allclose(out[0], np.exp(-1j * self.angles), atol=1e-12)
        with self.assertRaises(ArgumentError):
            rotation_transform(lambda z: np.ones_like(z), [1.0], self.angles, "T")
        with self.assertRaises(ArgumentError):
            rotation_transform(lambda z: z, [0.5], self.angles, "laplace")


class TestFit(unittest.TestCase):
    def test_recovers_polynomial_samples(self):
        rng = np.random.default_rng(1)
        w = _random_expansion(rng)
        grid = make_polar_grid(16, 32)
        fit, residual = fit_monomial_expansion(w(grid.nodes), grid, 3)
        self.assertLess(residual, 1e-10)
        points = np.array([0.1, 0.5 - 0.5j])
        np.testing.assert_allclose(fit(points), w(points), atol=1e-8)

    def test_unresolvable_degree(self):
        grid = make_polar_grid(8, 8)
        with self.assertRaises(ArgumentError):
            fit_monomial_expansion(np.zeros(grid.size), grid, 4)


class TestNormBounds(unittest.TestCase):
    def test_schur_certificates(self):
        inner = schur_certificate(0, "one", "inner")
        outer = schur_certificate(0, "inv_sqrt", "outer")
        self.assertAlmostEqual(inner, 0.25, places=3)
        self.assertLessEqual(outer, 1.0 + 1e-3)
        self.assertGreater(outer, 0.9)
        for l in (1, 5, 12):
            self.assertLessEqual(schur_certificate(l), 1.5 + 1e-3)
        with self.assertRaises(ArgumentError):
            schur_certificate(0, part="full")

    def test_discretized_norms_respect_bounds(self):
        bound = schur_norm_bound(0)
        self.assertLessEqual(bound, 5.0)
        self.assertLessEqual(T_l_norm_estimate(0, 128), bound + 1e-2)
        self.assertLessEqual(T_l_norm_estimate(0, 128), np.sqrt(4.5) + 1e-2)
        self.assertLessEqual(T_l_norm_estimate(7, 128), 1.5 + 1e-2)
        self.assertLessEqual(T_l_norm_estimate(-7, 128), 5.0 + 1e-2)
        with self.assertRaises(ArgumentError):
            T_l_norm_estimate(0, 32)

    def test_radial_matrix_layout(self):
        upper = T_l_matrix(1, 64)
        self.assertEqual(upper.shape, (64, 64))
        self.assertTrue(np.all(np.isfinite(upper)))
        # l ≥ 1 only integrates over r > s
        np.testing.assert_array_equal(np.tril(upper), 0.0)
        full = T_l_matrix(-2, 64)
        self.assertEqual(full.shape, (64, 64))
        np.testing.assert_array_equal(np.diag(full), 0.0)
        self.assertGreater(np.abs(np.tril(full, -1)).max(), 0.0)


if __name__ == "__main__":
    unittest.main()
