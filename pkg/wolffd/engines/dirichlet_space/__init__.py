"""Dirichlet and harmonic Dirichlet norms, kernel, Pick coefficients"""

from .service import (
    cnp_coeffs,
    dirichlet_inner,
    dirichlet_norm_coeff,
    dirichlet_norm_quad,
    dirichlet_norm_sq_closed,
    harmonic_dirichlet_norm,
    hd_seminorm_quad,
    kernel_poly,
    poisson_extend,
    rk_eval,
)

__all__ = [
    "cnp_coeffs", "dirichlet_inner", "dirichlet_norm_coeff", "dirichlet_norm_quad",
    "dirichlet_norm_sq_closed", "harmonic_dirichlet_norm", "hd_seminorm_quad",
    "kernel_poly", "poisson_extend", "rk_eval",
]
