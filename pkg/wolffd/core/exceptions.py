"""
Error types

Every failure the CLI distinguishes by exit code has its own class here.
"""

from typing import Dict, List, Optional


class WolffdError(Exception):
    """Base class for all wolffd errors"""


class ArgumentError(WolffdError, ValueError):
    """Raised when an argument is outside the documented domain."""


class ConvergenceError(WolffdError):
    """Raised when an iteration hits its cap; keeps the last estimate."""

    def __init__(self, msg: str, estimate: float, iterations: int):
        super().__init__(msg)
        self.estimate = estimate
        self.iterations = iterations


def _describe(violation: Dict) -> str:
    text = f"{violation['hypothesis']} violated"
    if violation.get("node") is not None:
        text += f" at z = {violation['node']:.6g}"
    return text + f" (margin {violation['margin']:.3e})"


class HypothesisError(WolffdError):
    """Raised when problem data violate the theorem hypotheses."""

    def __init__(self, violations: List[Dict]):
        super().__init__("; ".join(_describe(v) for v in violations))
        self.violations = violations


class RefinementError(WolffdError):
    """Raised when a discretization does not reach its tolerance."""

    def __init__(self, msg: str, residual: Optional[float] = None):
        super().__init__(msg)
        self.residual = residual


class ParseError(WolffdError):
    """Raised when an input file cannot be read or does not match its schema."""
