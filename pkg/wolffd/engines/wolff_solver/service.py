"""
Wolff Solver Service

Checks the hypotheses of the ideal-membership construction, assembles
u_h on grids, recovers analytic coefficients and reports the contracts:
pointwise residual of F·u = H³h, negative-frequency mass of u_h on
interior circles and the Dirichlet-norm ratio against
K = √(144‖M_H‖² + 73104).
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from wolffd.core.exceptions import ArgumentError, HypothesisError, RefinementError
from wolffd.engines.dirichlet_space import dirichlet_norm_coeff
from wolffd.engines.disk_core import (
    AnalyticPoly,
    compose_poly_mobius,
    make_boundary_grid,
    make_polar_grid,
    mobius_tail_degree,
)
from wolffd.engines.multiplier_ops import (
    MultiplierTuple,
    column_norm,
    mult_matrix,
    op_norm,
    positivity_gap,
)
from wolffd.engines.wolff_solver.problem import (
    SolveParams,
    UhEvaluator,
    WolffProblem,
    angular_tail,
    recover_coefficients,
)

COLUMN_NORM_SLACK = 1e-8
ANALYTICITY_RADII = (0.5, 0.7, 0.9)
ANALYTICITY_SAMPLES = 512
GAP_DEGREE = 64


@dataclass
class ValidationReport:
    column_norm: float
    min_gram: float
    min_gram_node: complex
    b_margin: float
    b_node: complex
    delta_margin: float
    violations: List[dict] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass
class WolffSolution:
    u: Tuple[AnalyticPoly, ...]
    residual: float
    analyticity_defect: float
    norm_ratio: float
    K_bound: float
    mh_estimate: float
    fit_residual: float = 0.0
    recovery_bound: float = 0.0
    scale: float = 1.0
    positivity_gap: Optional[float] = None
    tol: float = 1e-6
    # column norm of G for the rescaled problem; set by solve_ideal only
    g_column_norm: Optional[float] = None

    @property
    def residual_ok(self) -> bool:
        return self.residual <= self.tol

    @property
    def analyticity_ok(self) -> bool:
        return self.analyticity_defect <= 10.0 * self.tol

    @property
    def norm_ok(self) -> bool:
        return self.norm_ratio <= self.K_bound

    @property
    def g_norm_ok(self) -> bool:
        return self.g_column_norm is None or self.g_column_norm <= self.K_bound

    @property
    def passed(self) -> bool:
        return self.residual_ok and self.analyticity_ok and self.norm_ok and self.g_norm_ok


def norm_bound_K(mh: float) -> float:
    """√(144 mh² + 73104)"""
    if mh < 0:
        raise ArgumentError(f"‖M_H‖ estimate must be nonnegative, got {mh}")
    return float(np.sqrt(144.0 * mh ** 2 + 73104.0))


def check_nodes(params: SolveParams) -> np.ndarray:
    """Disk grid, boundary grid and the origin"""
    grid = make_polar_grid(params.n_r, params.n_theta)
    bgrid = make_boundary_grid(params.n_theta)
    return np.concatenate([[0.0 + 0.0j], grid.nodes, bgrid.nodes])


def _multiplier_degree(problem: WolffProblem) -> int:
    return max(problem.params.N, problem.F.max_degree, problem.H.degree, 1)


def mh_estimate(problem: WolffProblem) -> float:
    return op_norm(mult_matrix(problem.H, _multiplier_degree(problem)))


def validate_problem(problem: WolffProblem, raise_on_violation: bool = True) -> ValidationReport:
    """Hypotheses (a) column norm ≤ 1, (b) |H|² ≤ FF* and FF* ≥ delta on the grids"""
    nodes = check_nodes(problem.params)
    gram = problem.F.gram(nodes)
    H2 = np.abs(problem.H(nodes)) ** 2
    cn = column_norm(problem.F, _multiplier_degree(problem))

    i_min = int(np.argmin(gram))
    b_slack = gram - H2
    i_b = int(np.argmin(b_slack))
    report = ValidationReport(
        column_norm=cn,
        min_gram=float(gram[i_min]),
        min_gram_node=complex(nodes[i_min]),
        b_margin=float(b_slack[i_b]),
        b_node=complex(nodes[i_b]),
        delta_margin=float(gram[i_min] - problem.delta),
    )
    if cn > 1.0 + COLUMN_NORM_SLACK:
        report.violations.append({
            "hypothesis": "(a) column norm of M_F at most 1",
            "node": None,
            "margin": 1.0 - cn,
        })
    if report.b_margin < -1e-12 * max(1.0, float(np.max(H2))):
        report.violations.append({
            "hypothesis": "(b) |H(z)|^2 <= sum |f_j(z)|^2",
            "node": report.b_node,
            "margin": report.b_margin,
        })
    if report.delta_margin < 0:
        report.violations.append({
            "hypothesis": "delta lower bound for F F*",
            "node": report.min_gram_node,
            "margin": report.delta_margin,
        })
    if report.violations and raise_on_violation:
        raise HypothesisError(report.violations)
    logger.debug(f"problem valid: column norm {cn:.6g}, min FF* {report.min_gram:.6g}")
    return report


def normalize_origin(F: MultiplierTuple, H: AnalyticPoly, N_out: int = 48,
                     search_radius: float = 0.5, n_r: int = 8, n_theta: int = 32):
    """Precompose with β_a so that H(β_a(0)) = H(a) ≠ 0.

    a is the node of maximal |H| (first in node order) on a polar grid of
    radius search_radius; identity when H(0) ≠ 0.
    """
    if H.is_zero():
        raise ArgumentError("H is identically zero; the trivial solution G = 0 applies")
    if abs(H(0.0)) > 1e-12:
        return F, H, 0.0j
    grid = make_polar_grid(n_r, n_theta)
    nodes = search_radius * grid.nodes
    a = complex(nodes[int(np.argmax(np.abs(H(nodes))))])
    degree = max(N_out, F.max_degree, H.degree, mobius_tail_degree(a))
    Fb = MultiplierTuple(tuple(compose_poly_mobius(f, a, degree) for f in F))
    Hb = compose_poly_mobius(H, a, degree)
    logger.info(f"H(0) = 0; precomposing with the Möbius map at a = {a:.6g}")
    return Fb, Hb, a


def prepare_problem(problem: WolffProblem) -> Tuple[WolffProblem, float]:
    """Rescale by the column norm when params.normalize asks for it; returns (problem, scale)"""
    scale = 1.0
    if problem.params.normalize:
        cn = column_norm(problem.F, _multiplier_degree(problem))
        if cn > 1.0 + COLUMN_NORM_SLACK:
            scale = cn
            problem = problem.rescaled(cn)
            logger.info(f"rescaled F and H by 1/{cn:.6g} to reach column norm 1")
    return problem, scale


def _residual(problem: WolffProblem, u: Sequence[AnalyticPoly]) -> float:
    nodes = check_nodes(problem.params)
    Fz = problem.F.evaluate(nodes)
    U = np.stack([p(nodes) for p in u], axis=-1)
    return float(np.max(np.abs(np.sum(Fz * U, axis=-1) - problem.target(nodes))))


def _analyticity_defect(evaluator: UhEvaluator) -> float:
    K = ANALYTICITY_SAMPLES
    theta = 2.0 * np.pi * np.arange(K) / K
    vals = evaluator.u(np.array(ANALYTICITY_RADII), theta)
    spec = np.fft.fft(vals, axis=1) / K
    negative = spec[:, K // 2 + 1:, :]
    mass = np.sum(np.abs(negative), axis=1)
    return float(np.max(mass)) if mass.size else 0.0


def solve_uh(problem: WolffProblem) -> WolffSolution:
    """Construct u_h with F·u_h = H³h and measure its contracts"""
    original = problem
    problem, scale = prepare_problem(problem)
    p = problem.params
    validate_problem(problem)

    evaluator = UhEvaluator(problem)
    if problem.m and p.cauchy_method == "rotation":
        tail = angular_tail(evaluator, p.n_angular)
        evaluator.fit_residual = tail
        if tail > p.tol:
            raise RefinementError(
                f"angular spectrum of w decays only to {tail:.3e} > tol {p.tol:.1e}; "
                f"raise n_angular or the grid size",
                residual=tail,
            )

    u = recover_coefficients(evaluator, p.N, p.r_rec)
    residual = _residual(problem, u)
    defect = _analyticity_defect(evaluator) if problem.m else 0.0

    norms = np.array([dirichlet_norm_coeff(c) for c in u])
    h_norm = dirichlet_norm_coeff(problem.h)
    ratio = float(np.sqrt(np.sum(norms ** 2)) / h_norm) if h_norm > 0 else 0.0
    mh = mh_estimate(problem)
    K = norm_bound_K(mh)

    if scale != 1.0:
        u = tuple(c.scale(scale ** 2) for c in u)
        residual = _residual(original, u)

    solution = WolffSolution(
        u=u,
        residual=residual,
        analyticity_defect=defect,
        norm_ratio=ratio,
        K_bound=K,
        mh_estimate=mh,
        fit_residual=evaluator.fit_residual,
        recovery_bound=float(p.r_rec ** (p.N + 1)),
        scale=scale,
        tol=p.tol,
    )
    logger.info(
        f"solve_uh: n={problem.n}, N={p.N}, residual {residual:.3e}, "
        f"analyticity {defect:.3e}, norm ratio {ratio:.4g} (K = {K:.4g})"
    )
    return solution


def solve_ideal(F: MultiplierTuple, H: AnalyticPoly, params: SolveParams = SolveParams(),
                origin: bool = False) -> WolffSolution:
    """G with F·Gᵀ = H³ (the h = 1 case of solve_uh).

    With origin=True and H(0) = 0 the problem is solved for (F∘β, H∘β) and
    the result is composed back with β = β⁻¹.
    """
    if H.is_zero():
        zero = tuple(AnalyticPoly.constant(0.0) for _ in F)
        return WolffSolution(zero, 0.0, 0.0, 0.0, norm_bound_K(0.0), 0.0, tol=params.tol, g_column_norm=0.0)

    a = 0.0j
    Fs, Hs = F, H
    if origin:
        Fs, Hs, a = normalize_origin(F, H, params.N)
    solution = solve_uh(WolffProblem(Fs, Hs, AnalyticPoly.constant(1.0), params))
    if a != 0.0:
        # G∘β has infinitely many coefficients; keep them until |a|^k is below rounding
        degree = params.N + mobius_tail_degree(a)
        solution.u = tuple(compose_poly_mobius(g, a, degree) for g in solution.u)
        solution.residual = _residual(WolffProblem(F, H, AnalyticPoly.constant(1.0), params), solution.u)
    degree = max(params.N, max(g.degree for g in solution.u), 1)
    G = MultiplierTuple(solution.u).scale(1.0 / solution.scale ** 2)
    solution.g_column_norm = column_norm(G, degree)
    logger.info(f"solve_ideal: column norm of G {solution.g_column_norm:.6g} against K = {solution.K_bound:.6g}")
    if not solution.g_norm_ok:
        logger.warning("column norm of G exceeds the norm bound K")
    return solution


def evaluate_uh(problem: WolffProblem, radii, angles) -> np.ndarray:
    """u_h on a polar product, shape (len(radii), len(angles), n)"""
    problem, scale = prepare_problem(problem)
    return UhEvaluator(problem).u(radii, angles) * scale ** 2


def certify_positivity(problem: WolffProblem, solution: WolffSolution, N: int = GAP_DEGREE) -> float:
    """Positivity gap of K²M_F^R M_F^{R*} - M_{H³}M_{H³}* for the (rescaled) problem"""
    prepared, _ = prepare_problem(problem)
    gap = positivity_gap(prepared.F, prepared.H, solution.K_bound, N)
    solution.positivity_gap = gap
    return gap


def recheck_solution(F: MultiplierTuple, H: AnalyticPoly, h: AnalyticPoly,
                     u: Sequence[AnalyticPoly], n_r: int, n_theta: int) -> float:
    """max |F·u - H³h| over a fresh grid"""
    problem = WolffProblem(F, H, h, SolveParams(n_r=n_r, n_theta=n_theta))
    return _residual(problem, u)
