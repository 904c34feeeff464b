"""
Koszul Correction Matrix

For a row C = (c_1, ..., c_n) the matrix Q has one column per pair j < k
(lexicographic), holding +c_k in row j and -c_j in row k. Then C·Q = 0 and
QQ* = (CC*)I - C*C. Entries are unconjugated, so Q(F(z)) is analytic in z.
"""

from typing import List, Tuple

import numpy as np

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.multiplier_ops import MultiplierTuple


def q_pairs(n: int) -> List[Tuple[int, int]]:
    """Column labels (j, k), 0-based, in lexicographic order"""
    return [(j, k) for j in range(n) for k in range(j + 1, n)]


def q_batch(C: np.ndarray) -> np.ndarray:
    """Q for a stack of rows: C has shape (..., n), result (..., n, n(n-1)/2)"""
    C = np.asarray(C, dtype=complex)
    if C.ndim < 1 or C.shape[-1] < 1:
        raise ArgumentError("q_matrix needs a row of length n ≥ 1")
    n = C.shape[-1]
    pairs = q_pairs(n)
    Q = np.zeros(C.shape[:-1] + (n, len(pairs)), dtype=complex)
    for col, (j, k) in enumerate(pairs):
        Q[..., j, col] = C[..., k]
        Q[..., k, col] = -C[..., j]
    return Q


def q_matrix(C) -> np.ndarray:
    C = np.asarray(C, dtype=complex).reshape(-1)
    return q_batch(C)


def _check_closed_disk(z) -> None:
    if np.any(np.abs(np.asarray(z)) > 1.0 + 1e-12):
        raise ArgumentError("Q(F(z)) is only defined for |z| ≤ 1")


def q_of_F(F: MultiplierTuple, z) -> np.ndarray:
    """Q(F(z)); vectorized over array z with the matrix axes last"""
    _check_closed_disk(z)
    return q_batch(F.evaluate(z))


def q_derivative(F: MultiplierTuple, z) -> np.ndarray:
    """Entrywise d/dz of Q(F(z)), i.e. Q built from F'(z)"""
    _check_closed_disk(z)
    return q_batch(F.derivative().evaluate(z))


def q_adjoint_apply(Q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Q* v for stacks: Q (..., n, m), v (..., n) -> (..., m)"""
    return np.einsum("...jc,...j->...c", np.conj(Q), v)


def q_apply(Q: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Q w for stacks: Q (..., n, m), w (..., m) -> (..., n)"""
    return np.einsum("...jc,...c->...j", Q, w)
