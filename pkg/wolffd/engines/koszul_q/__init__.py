"""Explicit kernel-spanning matrix Q with QQ* = CC*I - C*C"""

from .service import q_adjoint_apply, q_apply, q_batch, q_derivative, q_matrix, q_of_F, q_pairs

__all__ = ["q_adjoint_apply", "q_apply", "q_batch", "q_derivative", "q_matrix", "q_of_F", "q_pairs"]
