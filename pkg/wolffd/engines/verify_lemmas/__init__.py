"""Numerical verification of the lemma constants and the term estimates"""

from .service import (
    lemma2_ratio,
    random_boundary_function,
    verify_cauchy_oracle,
    verify_hd_extension_bound,
    verify_kernel_identity,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
)
from .terms import m_q_norm, measure_terms, verify_boundary_c0, verify_term_estimates

__all__ = [
    "lemma2_ratio", "m_q_norm", "measure_terms", "random_boundary_function",
    "verify_boundary_c0", "verify_cauchy_oracle", "verify_hd_extension_bound",
    "verify_kernel_identity", "verify_lemma2", "verify_lemma3", "verify_lemma4",
    "verify_term_estimates",
]
