"""
Schur-test certificates and discretized norms for the radial operators T_l.

T_l f(s) = ∫_0^1 K(s, r) f(r) r dr on L²([0,1], r dr) with

    l ≥ 1:          K(s, r) = χ(r > s) s^{l-1} r^{-l} / (1 - s²)
    l ≤ 0, inner:   K(s, r) = S_L(s) r^L s^{-L-1} χ(r < s)       (enters with a minus sign)
    l ≤ 0, outer:   K(s, r) = χ(r > s) r^L s^{1+L} / (1 - s²)

where L = -l and S_L(s) = Σ_{k≤L} s^{2k}. A certificate is the supremum over
v of (1/p(v)) ∫ 𝒦(u, v) p(u) u du for the Gram kernel 𝒦(u, v) = ∫ K(s,u)K(s,v) s ds,
so ‖part‖ ≤ √certificate.
"""

from typing import Callable, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from wolffd.core.exceptions import ArgumentError, ConvergenceError
from wolffd.engines.disk_core import gauss_legendre_interval
from wolffd.engines.multiplier_ops import op_norm

WEIGHTS = ("one", "inv_sqrt")
PARTS = ("full", "inner", "outer")


def _S(L: int, s):
    return sum(s ** (2 * k) for k in range(L + 1))


def part_kernel(l: int, part: str) -> Tuple[Callable, bool]:
    """(K(s, r), upper) where upper means the support is r > s"""
    if l >= 1:
        if part not in ("full", "outer"):
            raise ArgumentError(f"l = {l} has a single kernel, got part {part!r}")
        return (lambda s, r: s ** (l - 1) * r ** (-float(l)) / (1.0 - s ** 2)), True
    L = -l
    if part == "inner":
        return (lambda s, r: _S(L, s) * r ** L * s ** (-L - 1.0)), False
    if part == "outer":
        return (lambda s, r: r ** L * s ** (1.0 + L) / (1.0 - s ** 2)), True
    raise ArgumentError(f"l = {l} needs part 'inner' or 'outer', got {part!r}")


def _weighted_nodes(weight: str, a, b, n: int):
    """Nodes/weights for ∫_a^b g(u) p(u) du with p folded into the weights"""
    if weight == "one":
        return gauss_legendre_interval(n, a, b)
    # u = sin θ removes (1 - u²)^{-1/2}
    th, w = gauss_legendre_interval(n, np.arcsin(a), np.arcsin(b))
    return np.sin(th), w


def _p(weight: str, v):
    return np.ones_like(v) if weight == "one" else 1.0 / np.sqrt(1.0 - v ** 2)


def schur_certificate(l: int, weight: str = "inv_sqrt", part: str = "full",
                      n_quad: int = 96, n_v: int = 240) -> float:
    """Numerical sup over a v-grid of the Schur ratio for the Gram kernel of one part"""
    if weight not in WEIGHTS:
        raise ArgumentError(f"unknown Schur weight {weight!r}")
    if n_quad < 8 or n_v < 8:
        raise ArgumentError("schur_certificate needs n_quad >= 8 and n_v >= 8")
    K, upper = part_kernel(l, part)
    v = np.sin(0.5 * np.pi * (np.arange(n_v) + 0.5) / n_v)

    # s = sin θ on the outer integral tames (1 - s²)^{-1/2} growth of P
    if upper:
        th, ws = gauss_legendre_interval(n_quad, np.zeros_like(v), np.arcsin(v))
    else:
        th, ws = gauss_legendre_interval(n_quad, np.arcsin(v), np.full_like(v, 0.5 * np.pi))
    s = np.sin(th)
    ws = ws * np.cos(th)

    if upper:
        u, wu = _weighted_nodes(weight, s, np.ones_like(s), n_quad)
    else:
        u, wu = _weighted_nodes(weight, np.zeros_like(s), s, n_quad)
    P = np.sum(K(s[..., None], u) * u * wu, axis=-1)

    J = np.sum(K(s, v[:, None]) * P * s * ws, axis=-1) / _p(weight, v)
    return float(np.max(J))


def schur_norm_bound(l: int, n_quad: int = 96, n_v: int = 240) -> float:
    """√C for l ≥ 1; √(2C_inner + 2C_outer) for l ≤ 0"""
    if l >= 1:
        return float(np.sqrt(schur_certificate(l, "inv_sqrt", "full", n_quad, n_v)))
    c_in = schur_certificate(l, "one", "inner", n_quad, n_v)
    c_out = schur_certificate(l, "inv_sqrt", "outer", n_quad, n_v)
    return float(np.sqrt(2.0 * c_in + 2.0 * c_out))


def T_l_matrix(l: int, n_grid: int) -> np.ndarray:
    """Nyström matrix √ω_i K(s_i, r_j) √ω_j with ω = Gauss-Legendre weight times r"""
    r, w = gauss_legendre_interval(n_grid, 0.0, 1.0)
    om = np.sqrt(w * r)
    s = r[:, None]
    rr = r[None, :]
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        if l >= 1:
            K, _ = part_kernel(l, "full")
            kern = np.where(rr > s, K(s, rr), 0.0)
        else:
            K_in, _ = part_kernel(l, "inner")
            K_out, _ = part_kernel(l, "outer")
            kern = np.where(rr < s, -K_in(s, rr), 0.0) + np.where(rr > s, K_out(s, rr), 0.0)
    return om[:, None] * kern * om[None, :]


def T_l_norm_estimate(l: int, n_grid: int = 256, tol: float = 1e-6) -> float:
    """Largest singular value of the discretized T_l on L²([0,1], r dr)"""
    if n_grid < 64:
        raise ArgumentError(f"T_l_norm_estimate needs n_grid >= 64, got {n_grid}")
    matrix = T_l_matrix(l, n_grid)
    try:
        return op_norm(matrix, tol)
    except ConvergenceError as exc:
        # clustered top singular values; fall back to a dense SVD
        logger.warning(f"T_l power iteration stalled for l={l} ({exc}); using dense singular values")
        return float(scipy.linalg.svdvals(matrix)[0])
