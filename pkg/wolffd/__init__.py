"""
wolffd

Numerical toolkit for Wolff's ideal problem in the multiplier algebra of
Dirichlet space: explicit dbar-corrected solutions of F·Gᵀ = H³ and
numerical checks of the supporting estimates.
"""

__version__ = "0.1.0"
