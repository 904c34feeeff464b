"""
Multiplication Operators on Dirichlet Space

Matrices of M_φ in the orthonormal basis e_n = z^n/√(n+1) truncated to
degree N, power-iteration operator norms, row/column operators of a tuple
F = (f_1, ..., f_n) and the compression of the operator inequality
M_{H³}M_{H³}* ≤ K² M_F^R M_F^{R*}.

All matrices are lower triangular, so products of truncations are exact
compressions of the corresponding operator products.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg
from loguru import logger

from wolffd.core.exceptions import ArgumentError, ConvergenceError
from wolffd.engines.dirichlet_space import kernel_poly
from wolffd.engines.disk_core import AnalyticPoly

MAX_ITERATIONS = 100_000
DEFAULT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Truncated matrix of a multiplication operator"""

    entries: np.ndarray
    N: int

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape


@dataclass(frozen=True, eq=False)
class MultiplierTuple:
    """Row F = (f_1, ..., f_n) of polynomial multipliers"""

    polys: Tuple[AnalyticPoly, ...]

    def __post_init__(self):
        polys = tuple(self.polys)
        if len(polys) < 1:
            raise ArgumentError("a multiplier tuple needs at least one entry")
        object.__setattr__(self, "polys", polys)

    @classmethod
    def of(cls, *polys: AnalyticPoly) -> "MultiplierTuple":
        return cls(tuple(polys))

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, j: int) -> AnalyticPoly:
        return self.polys[j]

    @property
    def max_degree(self) -> int:
        return max(p.degree for p in self.polys)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def evaluate(self, z) -> np.ndarray:
        """Values with the tuple index last: shape z.shape + (n,)"""
        z = np.asarray(z, dtype=complex)
        return np.stack([p(z) for p in self.polys], axis=-1)

    def derivative(self) -> "MultiplierTuple":
        return MultiplierTuple(tuple(p.derivative() for p in self.polys))

    def scale(self, c: complex) -> "MultiplierTuple":
        return MultiplierTuple(tuple(p.scale(c) for p in self.polys))

    def gram(self, z) -> np.ndarray:
        """F(z)F(z)* = Σ|f_j(z)|²"""
        return np.sum(np.abs(self.evaluate(z)) ** 2, axis=-1)


def mult_matrix(phi: AnalyticPoly, N: int) -> OperatorMatrix:
    """Entry (m, n) = φ_{m-n}·√((m+1)/(n+1)) for 0 ≤ m-n ≤ deg φ"""
    if N < phi.degree:
        raise ArgumentError(f"truncation degree {N} is below deg φ = {phi.degree}")
    a = phi.padded(N + 1)
    idx = np.arange(N + 1)
    diff = idx[:, None] - idx[None, :]
    band = np.where(diff >= 0, a[np.clip(diff, 0, N)], 0.0)
    scale = np.sqrt((idx[:, None] + 1.0) / (idx[None, :] + 1.0))
    return OperatorMatrix(band * scale, N)


def _top_eigenvalue(B: np.ndarray, tol: float, max_iter: int = MAX_ITERATIONS) -> float:
    """Largest eigenvalue of a Hermitian PSD matrix by power iteration.

    Stops when the residual ‖Bx - λx‖ falls below tol·λ.
    """
    n = B.shape[0]
    x = np.ones(n, dtype=complex) / np.sqrt(n)
    lam = 0.0
    for it in range(1, max_iter + 1):
        y = B @ x
        lam = float(np.real(np.vdot(x, y)))
        ny = np.linalg.norm(y)
        if ny == 0.0:
            return 0.0
        res = np.linalg.norm(y - lam * x)
        if res <= tol * max(lam, np.finfo(float).tiny):
            return lam
        x = y / ny
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} steps (estimate {lam:.12g})",
        estimate=float(np.sqrt(max(lam, 0.0))),
        iterations=max_iter,
    )


def _gram_norm(B: np.ndarray, tol: float) -> float:
    lam = _top_eigenvalue(B, tol)
    return float(np.sqrt(max(lam, 0.0)))


def op_norm(A, tol: float = DEFAULT_TOL) -> float:
    """Largest singular value of A via power iteration on A*A (or AA*)"""
    if tol <= 0:
        raise ArgumentError("tol must be positive")
    M = A.entries if isinstance(A, OperatorMatrix) else np.asarray(A, dtype=complex)
    if not np.any(M):
        return 0.0
    rows, cols = M.shape
    B = M.conj().T @ M if cols <= rows else M @ M.conj().T
    return _gram_norm(B, tol)


def _matrices(F: MultiplierTuple, N: int) -> List[np.ndarray]:
    if N < F.max_degree:
        raise ArgumentError(f"truncation degree {N} is below the tuple degree {F.max_degree}")
    return [mult_matrix(f, N).entries for f in F]


def column_norm(F: MultiplierTuple, N: int, tol: float = DEFAULT_TOL) -> float:
    """‖[M_f1; ...; M_fn]‖ through the Gram matrix Σ M_j* M_j"""
    mats = _matrices(F, N)
    B = sum(M.conj().T @ M for M in mats)
    if not np.any(B):
        return 0.0
    return _gram_norm(B, tol)


def row_norm(F: MultiplierTuple, N: int, tol: float = DEFAULT_TOL) -> float:
    """‖[M_f1 ... M_fn]‖ through Σ M_j M_j*"""
    mats = _matrices(F, N)
    B = sum(M @ M.conj().T for M in mats)
    if not np.any(B):
        return 0.0
    return _gram_norm(B, tol)


def adjoint_kernel_defect(phi: AnalyticPoly, z: complex, N: int) -> float:
    """‖M_φ* k_z − conj(φ(z)) k_z‖ / ‖k_z‖ for the degree-N kernel truncation"""
    if abs(z) > 0.9:
        raise ArgumentError("adjoint kernel check needs |z| ≤ 0.9")
    k = kernel_poly(z, N)
    n = np.arange(N + 1)
    v = k.coeffs * np.sqrt(n + 1.0)
    M = mult_matrix(phi, max(N, phi.degree)).entries[: N + 1, : N + 1]
    diff = M.conj().T @ v - np.conj(phi(z)) * v
    return float(np.linalg.norm(diff) / np.linalg.norm(v))


def positivity_gap(F: MultiplierTuple, H: AnalyticPoly, K: float, N: int) -> float:
    """Smallest eigenvalue of K² R R* − M_{H³} M_{H³}* on degree ≤ N"""
    H3 = H.pow(3)
    degree = max(N, F.max_degree, H3.degree)
    R = sum(M @ M.conj().T for M in _matrices(F, degree))
    MH = mult_matrix(H3, degree).entries
    G = (K ** 2) * R - MH @ MH.conj().T
    G = G[: N + 1, : N + 1]
    G = 0.5 * (G + G.conj().T)
    gap = float(scipy.linalg.eigvalsh(G, subset_by_index=[0, 0])[0])
    logger.debug(f"positivity gap at N={N}, K={K:.6g}: {gap:.3e}")
    return gap


def multiplier_tuple_norms(F: MultiplierTuple, N: int, tol: float = DEFAULT_TOL) -> dict:
    """Per-entry norms, column and row norms and the √18 comparison"""
    entries = [op_norm(mult_matrix(f, N), tol) for f in F]
    col = column_norm(F, N, tol)
    row = row_norm(F, N, tol)
    return {
        "entry_norms": entries,
        "column_norm": col,
        "row_norm": row,
        "sqrt18_bound": float(np.sqrt(18.0) * col),
        "row_le_sqrt18_column": bool(row <= np.sqrt(18.0) * col * (1 + 1e-12)),
    }


def tuple_from_pairs(items: Sequence[Sequence[Sequence[float]]]) -> MultiplierTuple:
    return MultiplierTuple(tuple(AnalyticPoly.from_pairs(p) for p in items))
