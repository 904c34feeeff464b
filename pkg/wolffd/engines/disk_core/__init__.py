"""Disk quadrature, circle Fourier analysis and Möbius maps"""

from .poly import AnalyticPoly
from .service import (
    BoundaryFunction,
    BoundaryGrid,
    DiskGrid,
    compose_poly_mobius,
    equispaced_angles,
    fourier_coeffs,
    gauss_legendre_interval,
    integrate_boundary,
    integrate_centered,
    integrate_disk,
    make_boundary_grid,
    make_polar_grid,
    mobius,
    mobius_tail_degree,
)

__all__ = [
    "AnalyticPoly", "BoundaryFunction", "BoundaryGrid", "DiskGrid",
    "compose_poly_mobius", "equispaced_angles", "fourier_coeffs",
    "gauss_legendre_interval", "integrate_boundary", "integrate_centered",
    "integrate_disk", "make_boundary_grid", "make_polar_grid", "mobius",
    "mobius_tail_degree",
]
