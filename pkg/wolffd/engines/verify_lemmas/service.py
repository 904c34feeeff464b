"""
Lemma Verification Service

Each check measures a quantity and compares it with the stated constant;
rows are collected in a VerificationReport. Random inputs come from
numpy's default_rng(seed), so (seed, trials) fixes every sample.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from wolffd.engines.cauchy_singular import (
    MonomialExpansion,
    T_apply,
    T_apply_quad,
    T_l_norm_estimate,
    beurling_derivative,
    cauchy_transform,
    cauchy_transform_quad,
    dbar_defect,
    rotation_decompose,
    rotation_identity_defect,
    schur_certificate,
    schur_norm_bound,
)
from wolffd.engines.dirichlet_space import harmonic_dirichlet_norm, poisson_extend
from wolffd.engines.disk_core import (
    AnalyticPoly,
    BoundaryFunction,
    DiskGrid,
    equispaced_angles,
    fourier_coeffs,
    integrate_disk,
    make_polar_grid,
)
from wolffd.engines.koszul_q import q_apply, q_derivative
from wolffd.engines.multiplier_ops import MultiplierTuple, mult_matrix, op_norm
from wolffd.schemas.report import VerificationReport

LEMMA2_CONSTANT = 8.0
T_L_SUP = 5.0
T_0_BOUND = float(np.sqrt(4.5))
GLOBAL_T_CONSTANT = 100.0 * np.pi ** 2


def _random_complex(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_boundary_function(rng: np.random.Generator, band: int, components: int) -> BoundaryFunction:
    """Trigonometric polynomial with frequencies in [-band, band] and decaying coefficients"""
    n = np.arange(-band, band + 1)
    coeffs = _random_complex(rng, (n.size, components)) / (1.0 + np.abs(n))[:, None]
    return BoundaryFunction(coeffs)


def lemma2_ratio(F: MultiplierTuple, w: BoundaryFunction, grid: DiskGrid) -> float:
    """∫‖Q'(z) w̃(z)‖² dA / ‖w‖²_HD with w̃ the harmonic extension"""
    m = len(F) * (len(F) - 1) // 2
    if m == 0:
        return 0.0
    ext = poisson_extend(w, grid.nodes)
    vals = q_apply(q_derivative(F, grid.nodes), ext)
    area = float(np.real(integrate_disk(np.sum(np.abs(vals) ** 2, axis=-1), grid)))
    return area / harmonic_dirichlet_norm(w) ** 2


def verify_lemma2(F: MultiplierTuple, trials: int = 100, seed: int = 42, band: int = 16,
                  n_r: int = 48, n_theta: int = 96, threads: int = 1) -> VerificationReport:
    """Ratios ∫‖Q'w̃‖²dA / ‖w‖²_HD for seeded random harmonic polynomials"""
    report = VerificationReport(suite="lemma2")
    m = len(F) * (len(F) - 1) // 2
    grid = make_polar_grid(n_r, n_theta)
    rng = np.random.default_rng(seed)
    samples = [random_boundary_function(rng, band, max(m, 1)) for _ in range(trials)]
    if m == 0:
        report.add("lemma2 max ratio", 0.0, LEMMA2_CONSTANT, "Q is empty for a single generator")
        return report

    const = BoundaryFunction(np.ones((1, m), dtype=complex))
    report.add("lemma2 constant w", lemma2_ratio(F, const, grid), LEMMA2_CONSTANT, "w = (1, ..., 1)")

    def run(w):
        return lemma2_ratio(F, w, grid)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            ratios = list(pool.map(run, samples))
    else:
        ratios = [run(w) for w in samples]
    if ratios:
        worst = int(np.argmax(ratios))
        report.add("lemma2 max ratio", ratios[worst], LEMMA2_CONSTANT,
                   f"{trials} trials, seed {seed}, band {band}, worst trial {worst}")
    logger.info(f"lemma2: {trials} trials, max ratio {max(ratios, default=0.0):.4g}")
    return report


def verify_lemma4(phi: AnalyticPoly, grid: DiskGrid, N: int = 64) -> VerificationReport:
    """sup (1-|z|²)|φ'(z)| against the truncated multiplier norm"""
    report = VerificationReport(suite="lemma4")
    z = grid.nodes
    lhs = float(np.max((1.0 - np.abs(z) ** 2) * np.abs(phi.derivative()(z))))
    rhs = op_norm(mult_matrix(phi, max(N, phi.degree)))
    report.add("lemma4 sup (1-|z|^2)|phi'|", lhs, rhs, f"deg phi = {phi.degree}, N = {N}")
    return report


def verify_kernel_identity(samples: Iterable[Tuple[complex, complex]]) -> VerificationReport:
    """1/(u-z) + z̄/(1-uz̄) = (1-|z|²)/((u-z)(1-uz̄)), relative to the right side"""
    report = VerificationReport(suite="kernel")
    worst, skipped, count = 0.0, 0, 0
    for u, z in samples:
        u, z = complex(u), complex(z)
        if u == z:
            skipped += 1
            continue
        left = 1.0 / (u - z) + np.conj(z) / (1.0 - u * np.conj(z))
        right = (1.0 - abs(z) ** 2) / ((u - z) * (1.0 - u * np.conj(z)))
        worst = max(worst, abs(left - right) / max(1.0, abs(right)))
        count += 1
    note = f"{count} pairs" + (f", {skipped} skipped with u = z" if skipped else "")
    report.add("kernel identity max difference", worst, 1e-12, note)
    return report


def boundary_data(values: np.ndarray, M: Optional[int] = None) -> BoundaryFunction:
    K = values.shape[0]
    return fourier_coeffs(values, K // 2 - 1 if M is None else M)


def verify_hd_extension_bound(w: MonomialExpansion, n_theta: int = 256) -> VerificationReport:
    """‖ŵ‖²_HD ≤ ‖w‖²_A + ‖ŵ‖²_σ for the closed-form Cauchy transform"""
    report = VerificationReport(suite="hd_extension")
    t = equispaced_angles(n_theta)
    wb = cauchy_transform(w, np.exp(1j * t))
    data = boundary_data(wb)
    lhs = harmonic_dirichlet_norm(data) ** 2
    rhs = w.area_norm_sq() + float(np.mean(np.abs(wb) ** 2))
    report.add("hd extension bound", lhs, rhs, f"{len(w.terms)} terms")
    return report


def _random_expansion(rng: np.random.Generator, max_exp: int, n_terms: int) -> MonomialExpansion:
    terms = {}
    for _ in range(n_terms):
        key = (int(rng.integers(0, max_exp + 1)), int(rng.integers(0, max_exp + 1)))
        terms[key] = complex(rng.standard_normal(), rng.standard_normal())
    return MonomialExpansion(terms)


def verify_cauchy_oracle(points: int = 20, seed: int = 7, max_exp: int = 3) -> VerificationReport:
    """Closed-form Cauchy transforms against centred quadrature, plus ∂̄ defects"""
    report = VerificationReport(suite="cauchy")
    rng = np.random.default_rng(seed)
    radius = 0.9 * np.sqrt(rng.uniform(size=points))
    zs = radius * np.exp(2j * np.pi * rng.uniform(size=points))
    worst_q, worst_d, worst_b = 0.0, 0.0, 0.0
    for n in range(max_exp + 1):
        for m in range(max_exp + 1):
            w = MonomialExpansion.monomial(n, m)
            closed = cauchy_transform(w, zs)
            quad = np.array([cauchy_transform_quad(w, z) for z in zs])
            worst_q = max(worst_q, float(np.max(np.abs(closed - quad))))
            worst_d = max(worst_d, max(dbar_defect(w, z) for z in zs))
            # ∂_z by central differences of the closed form
            step = 1e-5
            fd = np.array([
                0.5 * ((cauchy_transform(w, z + step) - cauchy_transform(w, z - step))
                       - 1j * (cauchy_transform(w, z + 1j * step) - cauchy_transform(w, z - 1j * step))) / (2 * step)
                for z in zs
            ])
            worst_b = max(worst_b, float(np.max(np.abs(fd - beurling_derivative(w, zs)))))
    report.add("cauchy closed form vs quadrature", worst_q, 1e-5, f"n, m <= {max_exp}, {points} points")
    report.add("cauchy dbar defect", worst_d, 1e-6, "central differences, step 1e-4")
    report.add("beurling derivative vs differences", worst_b, 1e-6, "central differences, step 1e-5")
    return report


def verify_lemma3(l_max: int = 30, trials: int = 50, seed: int = 3, n_grid: int = 256) -> VerificationReport:
    """Closed forms of T, rotation identity, per-l norms and the global 100π² bound"""
    report = VerificationReport(suite="lemma3")
    lams = [0.0, 0.3 + 0.2j, -0.5j, 0.7]
    cases = [
        ("T(1)", MonomialExpansion.monomial(0, 0), lambda lam: 0.0),
        ("T(z)", MonomialExpansion.monomial(1, 0), lambda lam: np.pi),
        ("T(z^2)", MonomialExpansion.monomial(2, 0), lambda lam: np.pi * lam),
    ]
    for name, f, expected in cases:
        err = max(abs(T_apply_quad(f, lam) - expected(lam)) for lam in lams)
        err = max(err, max(abs(T_apply(f, lam) - expected(lam)) for lam in lams))
        report.add(f"{name} quadrature", err, 1e-6, "centred polar quadrature")

    small = make_polar_grid(12, 24)
    worst = 0.0
    for n in range(4):
        for m in range(4):
            worst = max(worst, rotation_identity_defect(MonomialExpansion.monomial(n, m), small))
    report.add("rotation identity defect", worst, 1e-5, "monomials n, m <= 3")

    for part, weight, bound in (("inner", "one", 1.25), ("outer", "inv_sqrt", 1.0)):
        report.add(f"schur l=0 {part}", schur_certificate(0, weight, part), bound, f"weight {weight}")
    for l in (1, 5, 12):
        report.add(f"schur l={l}", schur_certificate(l, "inv_sqrt"), 1.5, "weight inv_sqrt")

    for l in range(-l_max, l_max + 1):
        est = T_l_norm_estimate(l, n_grid)
        bound = T_0_BOUND if l == 0 else T_L_SUP
        report.add(f"T_l norm l={l:+03d}", est, bound, f"Nystrom n_grid={n_grid}")
        report.add(f"T_l schur bound l={l:+03d}", schur_norm_bound(l), T_L_SUP, "Schur test")

    grid = make_polar_grid(32, 64)
    rng = np.random.default_rng(seed)
    worst_ratio, worst_parseval = 0.0, 0.0
    for _ in range(trials):
        f = _random_expansion(rng, 6, 4)
        f_norm = float(np.real(integrate_disk(np.abs(f(grid.nodes)) ** 2, grid)))
        t_norm = float(np.real(integrate_disk(np.abs(T_apply(f, grid.nodes)) ** 2, grid)))
        parseval = 2.0 * np.pi * sum(p.norm_sq() for p in rotation_decompose(f))
        worst_parseval = max(worst_parseval, abs(f_norm - parseval) / max(1.0, f_norm))
        if f_norm > 0:
            worst_ratio = max(worst_ratio, t_norm / f_norm)
    report.add("global ratio |Tf|^2/|f|^2", worst_ratio, GLOBAL_T_CONSTANT, f"{trials} random expansions, seed {seed}")
    report.add("parseval 2pi factor", worst_parseval, 1e-8, "relative difference")
    logger.info(f"lemma3: {len(report.rows)} rows, passed={report.passed}")
    return report
