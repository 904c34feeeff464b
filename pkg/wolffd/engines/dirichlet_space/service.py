"""
Dirichlet Space Norms and Kernels

The coefficient norm Σ(n+1)|a_n|² is canonical; the boundary-plus-area form
and the harmonic Dirichlet (two-sided) norm are evaluated alongside it.
Also the reproducing kernel k_w, the complete Nevanlinna-Pick coefficients
of 1/k and harmonic extension of boundary data.
"""

import numpy as np
from loguru import logger

from wolffd.core.exceptions import ArgumentError, RefinementError
from wolffd.engines.disk_core import (
    AnalyticPoly,
    BoundaryFunction,
    BoundaryGrid,
    DiskGrid,
    equispaced_angles,
    integrate_boundary,
    integrate_disk,
)


def dirichlet_norm_coeff(p: AnalyticPoly) -> float:
    """√(Σ (n+1)|a_n|²)"""
    n = np.arange(p.coeffs.size)
    return float(np.sqrt(np.sum((n + 1) * np.abs(p.coeffs) ** 2)))


def dirichlet_inner(p: AnalyticPoly, q: AnalyticPoly) -> complex:
    """Σ (n+1) a_n conj(b_n)"""
    size = max(p.coeffs.size, q.coeffs.size)
    n = np.arange(size)
    return complex(np.sum((n + 1) * p.padded(size) * np.conj(q.padded(size))))


def dirichlet_norm_quad(p: AnalyticPoly, bg: BoundaryGrid, dg: DiskGrid) -> float:
    """√(∫|p|²dσ + ∫_D|p'|²dA) by quadrature"""
    if p.degree >= bg.n_theta // 2 or p.degree >= dg.n_r:
        logger.warning(
            f"grids ({dg.n_r}x{dg.n_theta}, boundary {bg.n_theta}) under-resolve degree {p.degree}; "
            "quadrature norm is approximate"
        )
    boundary = integrate_boundary(np.abs(p(bg.nodes)) ** 2, bg)
    area = integrate_disk(np.abs(p.derivative()(dg.nodes)) ** 2, dg)
    return float(np.sqrt(np.real(boundary + area)))


def dirichlet_norm_sq_closed(p: AnalyticPoly) -> float:
    """Σ (1 + πn)|a_n|², the exact value of the boundary-plus-area form"""
    n = np.arange(p.coeffs.size)
    return float(np.sum((1.0 + np.pi * n) * np.abs(p.coeffs) ** 2))


def harmonic_dirichlet_norm(f: BoundaryFunction) -> float:
    """√(Σ (1+|n|)|f̂(n)|²), summed over any trailing component axes"""
    weights = 1.0 + np.abs(f.frequencies)
    mass = np.abs(f.coeffs) ** 2
    mass = mass.reshape(mass.shape[0], -1).sum(axis=1)
    return float(np.sqrt(np.sum(weights * mass)))


def hd_seminorm_quad(f: BoundaryFunction, n_theta: int = 256) -> float:
    """Douglas seminorm ∫∫|f(e^{it})-f(e^{iθ})|²/|e^{it}-e^{iθ}|² dσdσ.

    The θ nodes sit half a step from the t nodes so the diagonal is never hit.
    """
    t = equispaced_angles(n_theta)
    theta = t + np.pi / n_theta
    ft = f.sample(t)
    fth = f.sample(theta)
    diff = ft[:, None] - fth[None, :]
    if diff.ndim > 2:
        diff = np.sqrt(np.sum(np.abs(diff) ** 2, axis=tuple(range(2, diff.ndim))))
    denom = np.abs(np.exp(1j * t)[:, None] - np.exp(1j * theta)[None, :]) ** 2
    return float(np.mean(np.abs(diff) ** 2 / denom))


def _check_open_disk(*points) -> None:
    for p in points:
        if np.any(np.abs(np.asarray(p)) >= 1.0):
            raise ArgumentError("points must lie in the open unit disk")


def rk_eval(w, z):
    """k_w(z) = -log(1 - z w̄)/(z w̄), equal to 1 at z w̄ = 0"""
    _check_open_disk(w, z)
    x = np.asarray(z, dtype=complex) * np.conj(np.asarray(w, dtype=complex))
    small = np.abs(x) < 1e-8
    safe = np.where(small, 0.5, x)
    value = -np.log1p(-safe) / safe
    # two series terms are exact to rounding below the cutoff
    value = np.where(small, 1.0 + x / 2.0, value)
    return value if value.ndim else complex(value)


def kernel_poly(w: complex, N: int) -> AnalyticPoly:
    """Degree-N truncation Σ (z w̄)^n/(n+1)"""
    _check_open_disk(w)
    n = np.arange(N + 1)
    return AnalyticPoly(np.conj(complex(w)) ** n / (n + 1))


def cnp_coeffs(N: int) -> np.ndarray:
    """c_1..c_N with 1/k(x) = 1 - Σ c_n x^n, k(x) = Σ x^n/(n+1)"""
    if N < 1:
        raise ArgumentError("N must be at least 1")
    b = 1.0 / (np.arange(N + 1) + 1.0)
    d = np.zeros(N + 1)
    d[0] = 1.0
    for n in range(1, N + 1):
        d[n] = -np.dot(b[1 : n + 1], d[n - 1 :: -1][:n])
    c = -d[1:]
    if np.any(c <= 0):
        k = int(np.argmin(c)) + 1
        raise RefinementError(f"Nevanlinna-Pick coefficient c_{k} = {c[k - 1]:.3e} is not positive; "
                              f"the recurrence lost precision", residual=float(c[k - 1]))
    return c


def poisson_extend(f: BoundaryFunction, z):
    """Σ_{n≥0} f̂(n) z^n + Σ_{n<0} f̂(n) z̄^{|n|}"""
    _check_open_disk(z)
    z = np.asarray(z, dtype=complex)
    n = f.frequencies
    powers = np.where(
        n[None, :] >= 0,
        z.reshape(-1, 1) ** np.abs(n)[None, :],
        np.conj(z).reshape(-1, 1) ** np.abs(n)[None, :],
    )
    out = np.tensordot(powers, f.coeffs, axes=(1, 0))
    return out.reshape(z.shape + f.coeffs.shape[1:])
