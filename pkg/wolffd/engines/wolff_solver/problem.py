"""
Problem data and the pointwise Wolff construction.

For F = (f_1, ..., f_n), g = H³h and FF* = Σ|f_j|²:

    w   = Q(F)* (F')* g / (FF*)²                      (m = n(n-1)/2 components)
    u_h = F* g / FF* - Q(F) ŵ                          (n components)

F·u_h = g holds pointwise because F·Q(F) = 0, and ∂̄u_h = 0 because
∂̄(F*/FF*) = QQ*(F')*/(FF*)².
"""

from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

import numpy as np
from loguru import logger

from wolffd.core.exceptions import ArgumentError, RefinementError
from wolffd.engines.cauchy_singular import (
    beurling_derivative,
    cauchy_transform,
    fit_monomial_expansion,
    rotation_transform,
)
from wolffd.engines.disk_core import AnalyticPoly, make_polar_grid
from wolffd.engines.koszul_q import q_adjoint_apply, q_apply, q_batch
from wolffd.engines.multiplier_ops import MultiplierTuple

CAUCHY_METHODS = ("rotation", "monomial")


@dataclass(frozen=True)
class SolveParams:
    """Discretization and tolerance settings for one solve"""

    delta: float = 1e-3
    N: int = 48
    n_r: int = 128
    n_theta: int = 256
    tol: float = 1e-6
    normalize: bool = False
    cauchy_method: str = "rotation"
    r_rec: float = 0.9
    n_quad: int = 48
    n_angular: int = 256
    fit_degree: Optional[int] = None
    threads: int = 1

    def __post_init__(self):
        if self.delta <= 0:
            raise ArgumentError(f"delta must be positive, got {self.delta}")
        if self.N < 0:
            raise ArgumentError(f"N must be nonnegative, got {self.N}")
        if self.tol <= 0:
            raise ArgumentError(f"tol must be positive, got {self.tol}")
        if self.cauchy_method not in CAUCHY_METHODS:
            raise ArgumentError(f"cauchy_method must be one of {CAUCHY_METHODS}, got {self.cauchy_method!r}")
        if not 0.0 < self.r_rec < 1.0:
            raise ArgumentError(f"r_rec must lie in (0, 1), got {self.r_rec}")


@dataclass(frozen=True)
class WolffProblem:
    F: MultiplierTuple
    H: AnalyticPoly
    h: AnalyticPoly = field(default_factory=lambda: AnalyticPoly.constant(1.0))
    params: SolveParams = field(default_factory=SolveParams)

    @property
    def n(self) -> int:
        return len(self.F)

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def delta(self) -> float:
        return self.params.delta

    @property
    def target(self) -> AnalyticPoly:
        """H³h"""
        return self.H.pow(3) * self.h

    def with_params(self, **changes) -> "WolffProblem":
        return replace(self, params=replace(self.params, **changes))

    def rescaled(self, c: float) -> "WolffProblem":
        """(F/c, H/c) with delta/c², which preserves hypothesis (b)"""
        return WolffProblem(
            self.F.scale(1.0 / c),
            self.H.scale(1.0 / c),
            self.h,
            replace(self.params, delta=self.params.delta / c ** 2),
        )


class UhEvaluator:
    """Evaluates w, ŵ, ∂_z ŵ, Tw and u_h for one problem"""

    def __init__(self, problem: WolffProblem):
        self.problem = problem
        self.F = problem.F
        self.dF = problem.F.derivative()
        self.g = problem.target
        self.dg = self.g.derivative()
        self._expansions = None
        self.fit_residual = 0.0

    # -- pointwise pieces --------------------------------------------------

    def gram(self, z) -> np.ndarray:
        return self.F.gram(z)

    def base(self, z) -> np.ndarray:
        """F* g / FF*, shape z.shape + (n,)"""
        z = np.asarray(z, dtype=complex)
        Fz = self.F.evaluate(z)
        gram = np.sum(np.abs(Fz) ** 2, axis=-1)
        return np.conj(Fz) * (self.g(z) / gram)[..., None]

    def w(self, z) -> np.ndarray:
        """Q* (F')* g / (FF*)², shape z.shape + (m,)"""
        z = np.asarray(z, dtype=complex)
        Fz = self.F.evaluate(z)
        gram = np.sum(np.abs(Fz) ** 2, axis=-1)
        Q = q_batch(Fz)
        v = np.conj(self.dF.evaluate(z)) * (self.g(z) / gram ** 2)[..., None]
        return q_adjoint_apply(Q, v)

    def Q(self, z) -> np.ndarray:
        return q_batch(self.F.evaluate(z))

    def dQ(self, z) -> np.ndarray:
        return q_batch(self.dF.evaluate(z))

    # -- transforms on polar products ---------------------------------------

    def _polar(self, radii, angles):
        s = np.atleast_1d(np.asarray(radii, dtype=float))
        t = np.atleast_1d(np.asarray(angles, dtype=float))
        return s, t, s[:, None] * np.exp(1j * t)[None, :]

    def _monomial_fit(self):
        if self._expansions is None:
            p = self.problem.params
            degree = p.fit_degree
            if degree is None:
                degree = 2 * (max(self.g.degree, 0) + self.F.max_degree)
            grid = make_polar_grid(p.n_r, p.n_theta)
            samples = self.w(grid.nodes)
            fits = [fit_monomial_expansion(samples[:, c], grid, degree) for c in range(self.problem.m)]
            self._expansions = [e for e, _ in fits]
            self.fit_residual = max((r for _, r in fits), default=0.0)
            logger.debug(f"monomial fit of w at bidegree {degree}: residual {self.fit_residual:.3e}")
            if self.fit_residual > p.tol:
                raise RefinementError(
                    f"fit of w reached relative residual {self.fit_residual:.3e} > tol {p.tol:.1e}; "
                    f"raise the degree or the grid size",
                    residual=self.fit_residual,
                )
        return self._expansions

    def _transform(self, radii, angles, kind: str) -> np.ndarray:
        p = self.problem.params
        s, t, z = self._polar(radii, angles)
        if self.problem.m == 0:
            return np.zeros(z.shape + (0,), dtype=complex)
        if p.cauchy_method == "rotation":
            return rotation_transform(self.w, s, t, kind, p.n_quad, p.n_angular, p.threads)
        if kind == "T":
            raise ArgumentError("Tw is only available through the rotation method")
        op = cauchy_transform if kind == "cauchy" else beurling_derivative
        return np.stack([op(e, z) for e in self._monomial_fit()], axis=-1)

    def w_hat(self, radii, angles) -> np.ndarray:
        return self._transform(radii, angles, "cauchy")

    def dz_w_hat(self, radii, angles) -> np.ndarray:
        return self._transform(radii, angles, "dz")

    def T_w(self, radii, angles) -> np.ndarray:
        return self._transform(radii, angles, "T")

    def u(self, radii, angles) -> np.ndarray:
        """u_h on the polar product, shape (R, T, n)"""
        _, _, z = self._polar(radii, angles)
        out = self.base(z)
        if self.problem.m:
            out = out - q_apply(self.Q(z), self.w_hat(radii, angles))
        return out


def angular_tail(evaluator: UhEvaluator, n_angular: int) -> float:
    """Relative size of the top quarter of w's angular spectrum on three circles"""
    if evaluator.problem.m == 0:
        return 0.0
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    radii = np.array([0.5, 0.9, 1.0])
    vals = evaluator.w(radii[:, None] * np.exp(1j * theta)[None, :])
    spec = np.abs(np.fft.fft(vals, axis=1)) / n_angular
    l = np.abs(np.fft.fftfreq(n_angular, 1.0 / n_angular))
    top = float(np.max(spec))
    if top == 0.0:
        return 0.0
    return float(np.max(spec[:, l >= n_angular // 4]) / top)


def recovery_samples(N: int) -> int:
    K = 256
    while K < 4 * (N + 1):
        K *= 2
    return K


def recover_coefficients(evaluator: UhEvaluator, N: int, r_rec: float) -> Tuple[AnalyticPoly, ...]:
    """Taylor coefficients of each u_h component from samples on |z| = r_rec"""
    K = recovery_samples(N)
    theta = 2.0 * np.pi * np.arange(K) / K
    vals = evaluator.u([r_rec], theta)[0]
    spec = np.fft.fft(vals, axis=0) / K
    scale = r_rec ** -np.arange(N + 1, dtype=float)
    return tuple(AnalyticPoly(spec[: N + 1, j] * scale) for j in range(vals.shape[1]))
