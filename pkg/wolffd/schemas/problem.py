"""
Problem and Solution File Schemas
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from wolffd.engines.disk_core import AnalyticPoly
from wolffd.engines.multiplier_ops import MultiplierTuple

Coefficients = List[List[float]]


def _check_pairs(value: Coefficients) -> Coefficients:
    if not value:
        raise ValueError("coefficient array must not be empty")
    for pair in value:
        if len(pair) != 2:
            raise ValueError(f"coefficients are [re, im] pairs, got {pair}")
    return value


class GridSpec(BaseModel):
    """Polar quadrature grid size"""
    nr: int = Field(128, description="Gauss-Legendre radial nodes", ge=2)
    ntheta: int = Field(256, description="Equispaced angular nodes", ge=4)


class ProblemFile(BaseModel):
    """Ideal-membership problem F·u = H³h"""
    F: List[Coefficients] = Field(..., description="Tuple entries f_j as coefficient arrays", min_length=1)
    H: Coefficients = Field(..., description="Coefficients of H")
    h: Coefficients = Field([[1.0, 0.0]], description="Coefficients of h (default 1)")
    delta: float = Field(..., description="Certified lower bound for F(z)F(z)*", gt=0)
    N: Optional[int] = Field(None, description="Truncation degree", ge=0)
    grid: Optional[GridSpec] = Field(None, description="Disk grid size")
    normalize: bool = Field(False, description="Rescale F and H when the column norm of M_F exceeds 1")

    @field_validator("H", "h")
    @classmethod
    def _pairs(cls, v):
        return _check_pairs(v)

    @field_validator("F")
    @classmethod
    def _tuple_pairs(cls, v):
        return [_check_pairs(item) for item in v]

    def multiplier_tuple(self) -> MultiplierTuple:
        return MultiplierTuple(tuple(AnalyticPoly.from_pairs(f) for f in self.F))

    def poly(self, name: str) -> AnalyticPoly:
        return AnalyticPoly.from_pairs(getattr(self, name))

    class Config:
        json_schema_extra = {
            "example": {
                "F": [[[0, 0], [0.5, 0]], [[0.5, 0]]],
                "H": [[0, 0], [0.5, 0]],
                "delta": 0.25,
                "N": 48,
                "grid": {"nr": 128, "ntheta": 256},
                "normalize": False,
            }
        }


class MultiplierFile(BaseModel):
    """A single multiplier tuple for norm estimation"""
    F: List[Coefficients] = Field(..., description="Tuple entries f_j as coefficient arrays", min_length=1)

    @field_validator("F")
    @classmethod
    def _tuple_pairs(cls, v):
        return [_check_pairs(item) for item in v]

    def multiplier_tuple(self) -> MultiplierTuple:
        return MultiplierTuple(tuple(AnalyticPoly.from_pairs(f) for f in self.F))


class SolutionFile(BaseModel):
    """Solver output; G is present when h = 1, u otherwise"""
    G: Optional[List[Coefficients]] = Field(None, description="Coefficients of G with F·Gᵀ = H³")
    u: Optional[List[Coefficients]] = Field(None, description="Coefficients of u_h with F·u = H³h")
    residual: float = Field(..., description="max |F·u - H³h| over disk and boundary grids")
    analyticity_defect: float = Field(..., description="Negative-frequency mass on interior circles")
    norm_ratio: float = Field(..., description="‖u‖_D / ‖h‖_D")
    K_bound: float = Field(..., description="√(144‖M_H‖² + 73104)")
    passed: bool = Field(..., description="Every measured contract holds")
    G_column_norm: Optional[float] = Field(None, description="Column norm of M_G, bounded by K_bound when h = 1")
    positivity_gap: Optional[float] = Field(None, description="Smallest eigenvalue of the truncated operator inequality")
    settings: Dict[str, Any] = Field(default_factory=dict, description="Echo of the solve settings")

    def components(self) -> List[AnalyticPoly]:
        data = self.G if self.G is not None else self.u
        return [AnalyticPoly.from_pairs(c) for c in data or []]


class RadicalFile(BaseModel):
    """Tuple F and H for the radical diagnostic; extra keys are ignored"""
    F: List[Coefficients] = Field(..., description="Tuple entries f_j as coefficient arrays", min_length=1)
    H: Coefficients = Field(..., description="Coefficients of H")

    @field_validator("H")
    @classmethod
    def _pairs(cls, v):
        return _check_pairs(v)

    @field_validator("F")
    @classmethod
    def _tuple_pairs(cls, v):
        return [_check_pairs(item) for item in v]

    def multiplier_tuple(self) -> MultiplierTuple:
        return MultiplierTuple(tuple(AnalyticPoly.from_pairs(f) for f in self.F))

    def poly_H(self) -> AnalyticPoly:
        return AnalyticPoly.from_pairs(self.H)
