"""Cauchy transform, Beurling derivative and the singular operator T"""

from .rotation import rotation_transform
from .schur import T_l_matrix, T_l_norm_estimate, schur_certificate, schur_norm_bound
from .service import (
    MonomialExpansion,
    RadialProfile,
    T_apply,
    T_apply_quad,
    T_l_apply,
    beurling_derivative,
    cauchy_transform,
    cauchy_transform_quad,
    dbar_defect,
    fit_monomial_expansion,
    rotation_decompose,
    rotation_identity_defect,
)

__all__ = [
    "MonomialExpansion", "RadialProfile", "T_apply", "T_apply_quad", "T_l_apply",
    "T_l_matrix", "T_l_norm_estimate", "beurling_derivative", "cauchy_transform",
    "cauchy_transform_quad", "dbar_defect", "fit_monomial_expansion",
    "rotation_decompose", "rotation_identity_defect", "rotation_transform",
    "schur_certificate", "schur_norm_bound",
]
