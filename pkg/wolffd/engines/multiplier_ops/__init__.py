"""Truncated multiplication operators on Dirichlet space"""

from .service import (
    MultiplierTuple,
    OperatorMatrix,
    adjoint_kernel_defect,
    column_norm,
    mult_matrix,
    multiplier_tuple_norms,
    op_norm,
    positivity_gap,
    row_norm,
    tuple_from_pairs,
)

__all__ = [
    "MultiplierTuple", "OperatorMatrix", "adjoint_kernel_defect", "column_norm",
    "mult_matrix", "multiplier_tuple_norms", "op_norm", "positivity_gap", "row_norm",
    "tuple_from_pairs",
]
