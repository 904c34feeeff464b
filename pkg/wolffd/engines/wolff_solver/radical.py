"""
Radical-membership diagnostic: smallest m with |H|^m ≤ C0·Σ|f_j|² on the disk.

The supremum over the disk is replaced by maxima over two nested grids, so
the answer is a sampling heuristic rather than a certificate.
"""

from typing import Optional, Tuple

import numpy as np
from loguru import logger

from wolffd.core.exceptions import ArgumentError
from wolffd.engines.disk_core import AnalyticPoly, make_boundary_grid, make_polar_grid
from wolffd.engines.multiplier_ops import MultiplierTuple

CAVEAT = "grid maximization is a heuristic for the supremum over the disk, not a proof"
STABILITY_RATIO = 2.0


def _nodes(n_r: int, n_theta: int) -> np.ndarray:
    return np.concatenate([
        [0.0 + 0.0j],
        make_polar_grid(n_r, n_theta).nodes,
        make_boundary_grid(n_theta).nodes,
    ])


def _sup_ratio(F: MultiplierTuple, H: AnalyticPoly, m: int, nodes: np.ndarray) -> float:
    gram = F.gram(nodes)
    top = np.abs(H(nodes)) ** m
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(gram > 0, top / np.where(gram > 0, gram, 1.0), np.where(top > 0, np.inf, 0.0))
    return float(np.max(ratio))


def radical_diagnostic(F: MultiplierTuple, H: AnalyticPoly, m_max: int,
                       n_r: int = 64, n_theta: int = 128) -> Optional[Tuple[int, float]]:
    """(m, C0) for the smallest m whose grid supremum is finite and refinement-stable, else None"""
    if m_max < 1:
        raise ArgumentError(f"m_max must be at least 1, got {m_max}")
    if F.is_zero():
        raise ArgumentError("F is identically zero")
    coarse = _nodes(n_r, n_theta)
    fine = _nodes(2 * n_r, 2 * n_theta)
    for m in range(1, m_max + 1):
        s_coarse = _sup_ratio(F, H, m, coarse)
        s_fine = _sup_ratio(F, H, m, fine)
        logger.debug(f"radical m={m}: S coarse {s_coarse:.6g}, fine {s_fine:.6g}")
        if not (np.isfinite(s_coarse) and np.isfinite(s_fine)):
            continue
        if s_coarse == 0.0 and s_fine == 0.0:
            return m, 0.0
        if s_coarse > 0 and s_fine / s_coarse <= STABILITY_RATIO:
            return m, s_fine
    return None
