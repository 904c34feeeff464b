"""
Ideal-membership solver and the radical diagnostic.

Run: python -m unittest tests.test_wolff_solver
"""

import unittest

import numpy as np

from wolffd.core.exceptions import ArgumentError, HypothesisError, RefinementError
from wolffd.engines.disk_core import AnalyticPoly
from wolffd.engines.multiplier_ops import MultiplierTuple
from wolffd.engines.wolff_solver import (
    SolveParams,
    WolffProblem,
    certify_positivity,
    evaluate_uh,
    mh_estimate,
    norm_bound_K,
    normalize_origin,
    radical_diagnostic,
    recheck_solution,
    solve_ideal,
    solve_uh,
    validate_problem,
)

Z = AnalyticPoly.monomial(1)
ONE = AnalyticPoly.constant(1.0)
# F = (z/2, 1/2), H = z/2 has the closed-form solution u = (z²/8, z³/8)
HALF_PAIR = MultiplierTuple.of(Z.scale(0.5), ONE.scale(0.5))


class TestNormBound(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(norm_bound_K(0.0), 270.3775, places=3)
        self.assertAlmostEqual(norm_bound_K(1.0), 270.6437, places=3)
        self.assertAlmostEqual(norm_bound_K(2.0), 271.4406, places=3)
        with self.assertRaises(ArgumentError):
            norm_bound_K(-1.0)


class TestParams(unittest.TestCase):
    def test_rejects_bad_settings(self):
        with self.assertRaises(ArgumentError):
            SolveParams(delta=0.0)
        with self.assertRaises(ArgumentError):
            SolveParams(cauchy_method="fft")
        with self.assertRaises(ArgumentError):
            SolveParams(r_rec=1.0)

    def test_rescaling_keeps_delta_consistent(self):
        problem = WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2))
        scaled = problem.rescaled(2.0)
        self.assertAlmostEqual(scaled.delta, 0.05)
        self.assertAlmostEqual(complex(scaled.H.coeffs[1]), 0.25)


class TestValidation(unittest.TestCase):
    def test_valid_problem(self):
        report = validate_problem(WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2)))
        self.assertTrue(report.valid)
        self.assertAlmostEqual(report.min_gram, 0.25, places=12)
        self.assertAlmostEqual(report.column_norm, np.sqrt(3) / 2, places=6)

    def test_pointwise_domination_fails(self):
        problem = WolffProblem(MultiplierTuple.of(Z), ONE)
        with self.assertRaises(HypothesisError) as ctx:
            validate_problem(problem)
        self.assertIn("(b)", str(ctx.exception))
        (b,) = [v for v in ctx.exception.violations if v["hypothesis"].startswith("(b)")]
        self.assertEqual(b["node"], 0j)
        self.assertAlmostEqual(b["margin"], -1.0)

    def test_column_norm_fails(self):
        report = validate_problem(WolffProblem(MultiplierTuple.of(Z.scale(2.0)), Z), raise_on_violation=False)
        self.assertFalse(report.valid)
        self.assertTrue(any(v["hypothesis"].startswith("(a)") for v in report.violations))

    def test_delta_bound_fails(self):
        with self.assertRaises(HypothesisError) as ctx:
            validate_problem(WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.3)))
        self.assertIn("delta", str(ctx.exception))


class TestSolveUh(unittest.TestCase):
    def test_single_generator(self):
        H = AnalyticPoly.from_list([0.25, 0.25])
        h = AnalyticPoly.from_list([1.0, 0.5])
        solution = solve_uh(WolffProblem(MultiplierTuple.of(ONE), H, h))
        target = (H.pow(3) * h).padded(49)
        np.testing.assert_allclose(solution.u[0].padded(49), target, atol=1e-12)
        self.assertLess(solution.residual, 1e-12)
        self.assertEqual(solution.analyticity_defect, 0.0)
        self.assertTrue(solution.passed)

    def test_closed_form_pair(self):
        solution = solve_uh(WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2)))
        self.assertLessEqual(solution.residual, 1e-6)
        self.assertLessEqual(solution.analyticity_defect, 1e-5)
        np.testing.assert_allclose(solution.u[0].padded(6), [0, 0, 0.125, 0, 0, 0], atol=1e-8)
        np.testing.assert_allclose(solution.u[1].padded(6), [0, 0, 0, 0.125, 0, 0], atol=1e-8)
        self.assertAlmostEqual(solution.norm_ratio, np.sqrt(7.0 / 64.0), places=6)
        self.assertAlmostEqual(solution.mh_estimate, np.sqrt(2) / 2, places=6)
        self.assertLessEqual(solution.norm_ratio, solution.K_bound)
        self.assertTrue(solution.passed)

    def test_nonconstant_h(self):
        solution = solve_uh(WolffProblem(HALF_PAIR, Z.scale(0.5), Z, SolveParams(delta=0.2)))
        self.assertLessEqual(solution.residual, 1e-6)
        self.assertTrue(solution.passed)

    def test_generic_normalized_problem(self):
        F = MultiplierTuple.of(AnalyticPoly.monomial(2, 0.5), AnalyticPoly.from_list([0.25, 0.25]))
        params = SolveParams(delta=0.02, N=64, normalize=True)
        problem = WolffProblem(F, AnalyticPoly.monomial(2, 0.5), Z, params)
        solution = solve_uh(problem)
        self.assertLessEqual(solution.residual, 1e-5)
        self.assertLessEqual(solution.analyticity_defect, 1e-5)
        self.assertLessEqual(solution.norm_ratio, solution.K_bound)
        self.assertLess(recheck_solution(F, problem.H, Z, solution.u, 64, 128), 1e-5)

    def test_under_resolved_angular_spectrum(self):
        F = MultiplierTuple.of(Z.scale(0.7), AnalyticPoly.from_list([0.12, 0, 0, 0.1]))
        params = SolveParams(delta=0.01, n_r=32, n_theta=64, normalize=True, n_angular=16, n_quad=8)
        with self.assertRaises(RefinementError) as ctx:
            solve_uh(WolffProblem(F, ONE.scale(0.1), params=params))
        self.assertGreater(ctx.exception.residual, params.tol)

    def test_monomial_method_refuses_a_coarse_fit(self):
        params = SolveParams(delta=0.2, cauchy_method="monomial", tol=1e-9)
        with self.assertRaises(RefinementError):
            solve_uh(WolffProblem(HALF_PAIR, Z.scale(0.5), params=params))

    def test_evaluate_on_polar_product(self):
        problem = WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2))
        radii, angles = np.array([0.3, 0.8]), np.array([0.0, 1.0, 2.5])
        values = evaluate_uh(problem, radii, angles)
        self.assertEqual(values.shape, (2, 3, 2))
        z = radii[:, None] * np.exp(1j * angles)[None, :]
        np.testing.assert_allclose(values[..., 0], z ** 2 / 8, atol=1e-10)
        np.testing.assert_allclose(values[..., 1], z ** 3 / 8, atol=1e-10)

    def test_positivity_certificate(self):
        problem = WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2))
        solution = solve_uh(problem)
        gap = certify_positivity(problem, solution)
        self.assertGreaterEqual(gap, -1e-8)
        self.assertEqual(solution.positivity_gap, gap)


class TestContractsOnReferenceProblems(unittest.TestCase):
    def _check(self, F, H, h, delta):
        problem = WolffProblem(F, H, h, SolveParams(delta=delta, N=64))
        solution = solve_uh(problem)
        self.assertLessEqual(solution.residual, 1e-6)
        self.assertLessEqual(solution.analyticity_defect, 1e-5)
        self.assertLessEqual(solution.norm_ratio, norm_bound_K(mh_estimate(problem)))
        self.assertGreaterEqual(certify_positivity(problem, solution), -1e-8)
        self.assertTrue(solution.passed)

    def test_half_pair(self):
        for h in (ONE, Z, Z.pow(5)):
            with self.subTest(h=h.degree):
                self._check(HALF_PAIR, Z.scale(0.5), h, 0.2)

    def test_quadratic_pair(self):
        F = MultiplierTuple.of(AnalyticPoly.monomial(2, 0.5), AnalyticPoly.from_list([0.25, 0.25]))
        for h in (ONE, Z, Z.pow(5)):
            with self.subTest(h=h.degree):
                self._check(F, AnalyticPoly.monomial(2, 0.5), h, 0.02)


class TestSolveIdeal(unittest.TestCase):
    def test_constant_generator(self):
        solution = solve_ideal(MultiplierTuple.of(ONE), ONE.scale(0.5))
        self.assertAlmostEqual(complex(solution.u[0].coeffs[0]), 0.125, places=12)
        # M_c = c·I, so the column norm of the constant G is |c|
        self.assertAlmostEqual(solution.g_column_norm, 0.125, places=8)

    def test_column_norm_of_g_is_a_contract(self):
        solution = solve_ideal(HALF_PAIR, Z.scale(0.5), SolveParams(delta=0.2))
        self.assertGreater(solution.g_column_norm, 0.0)
        self.assertLessEqual(solution.g_column_norm, solution.K_bound)
        self.assertTrue(solution.passed)
        solution.g_column_norm = solution.K_bound * 2.0
        self.assertFalse(solution.g_norm_ok)
        self.assertFalse(solution.passed)
        self.assertIsNone(solve_uh(WolffProblem(HALF_PAIR, Z.scale(0.5), params=SolveParams(delta=0.2))).g_column_norm)

    def test_zero_target(self):
        solution = solve_ideal(HALF_PAIR, AnalyticPoly.constant(0.0))
        self.assertTrue(all(g.is_zero() for g in solution.u))
        self.assertEqual(solution.residual, 0.0)
        self.assertEqual(solution.g_column_norm, 0.0)

    def test_mobius_normalization(self):
        params = SolveParams(delta=0.2, normalize=True)
        direct = solve_ideal(HALF_PAIR, Z.scale(0.5), params)
        moved = solve_ideal(HALF_PAIR, Z.scale(0.5), params, origin=True)
        self.assertLessEqual(direct.residual, 1e-6)
        # G∘β is an infinite series; it is kept past N until |a|^k drops below rounding
        self.assertGreater(max(g.degree for g in moved.u), params.N)
        # both residuals sit at rounding level, so the 10x rule gets a 1e-12 floor
        self.assertLessEqual(moved.residual, 10.0 * max(direct.residual, 1e-12))
        self.assertTrue(moved.g_norm_ok)

    def test_origin_map(self):
        F, H, a = normalize_origin(HALF_PAIR, ONE)
        self.assertEqual(a, 0j)
        F, H, a = normalize_origin(MultiplierTuple.of(Z, ONE), Z)
        self.assertGreater(abs(a), 0.0)
        self.assertLessEqual(abs(a), 0.5)
        self.assertAlmostEqual(complex(H.coeffs[0]), a, places=12)
        with self.assertRaises(ArgumentError):
            normalize_origin(HALF_PAIR, AnalyticPoly.constant(0.0))


class TestMhEstimate(unittest.TestCase):
    def test_shift(self):
        problem = WolffProblem(HALF_PAIR, Z, params=SolveParams(N=64))
        self.assertAlmostEqual(mh_estimate(problem), np.sqrt(2), places=6)


class TestRadical(unittest.TestCase):
    def test_square_needed(self):
        m, c0 = radical_diagnostic(MultiplierTuple.of(Z, AnalyticPoly.constant(0.0)), Z, 4)
        self.assertEqual(m, 2)
        self.assertAlmostEqual(c0, 1.0, places=8)

    def test_not_in_radical(self):
        self.assertIsNone(radical_diagnostic(MultiplierTuple.of(Z), ONE, 8))

    def test_bounded_constant(self):
        F = MultiplierTuple.of(AnalyticPoly.monomial(2), AnalyticPoly.from_list([0, 0.5, -0.5]))
        m, c0 = radical_diagnostic(F, Z, 8)
        self.assertEqual(m, 2)
        self.assertGreater(c0, 4.9)
        self.assertLessEqual(c0, 5.0 + 1e-9)

    def test_argument_checks(self):
        with self.assertRaises(ArgumentError):
            radical_diagnostic(MultiplierTuple.of(Z), Z, 0)
        with self.assertRaises(ArgumentError):
            radical_diagnostic(MultiplierTuple.of(AnalyticPoly.constant(0.0)), Z, 3)


if __name__ == "__main__":
    unittest.main()
