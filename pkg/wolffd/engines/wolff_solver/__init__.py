"""Ideal-membership solver F·Gᵀ = H³ and the radical diagnostic"""

from .problem import SolveParams, UhEvaluator, WolffProblem
from .radical import CAVEAT, radical_diagnostic
from .service import (
    ValidationReport,
    WolffSolution,
    certify_positivity,
    check_nodes,
    evaluate_uh,
    mh_estimate,
    norm_bound_K,
    normalize_origin,
    prepare_problem,
    recheck_solution,
    solve_ideal,
    solve_uh,
    validate_problem,
)

__all__ = [
    "CAVEAT", "SolveParams", "UhEvaluator", "ValidationReport", "WolffProblem",
    "WolffSolution", "certify_positivity", "check_nodes", "evaluate_uh",
    "mh_estimate", "norm_bound_K", "normalize_origin", "prepare_problem", "radical_diagnostic",
    "recheck_solution", "solve_ideal", "solve_uh", "validate_problem",
]
