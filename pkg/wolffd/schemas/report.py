"""
Verification Report Schemas
"""

import math
from typing import List

from pydantic import BaseModel, Field

DEFAULT_TOL_REL = 1e-3
# rounding floor for rows whose exact value is zero
ABS_SLACK = 1e-12


class ReportRow(BaseModel):
    """One measured quantity against its stated bound"""
    name: str = Field(..., description="Row identifier")
    measured: float = Field(..., description="Measured value")
    bound: float = Field(..., description="Stated bound")
    passed: bool = Field(..., description="measured <= bound·(1 + tol_rel)")
    context: str = Field("", description="Free-form details")


class VerificationReport(BaseModel):
    """Rows ordered by name on output"""
    suite: str = Field(..., description="Suite that produced the report")
    tol_rel: float = Field(DEFAULT_TOL_REL, description="Relative slack for quadrature error")
    rows: List[ReportRow] = Field(default_factory=list)

    def add(self, name: str, measured: float, bound: float, context: str = "") -> ReportRow:
        measured = float(measured)
        bound = float(bound)
        ok = math.isfinite(measured) and measured <= bound * (1.0 + self.tol_rel) + ABS_SLACK
        row = ReportRow(name=name, measured=measured, bound=bound, passed=ok, context=context)
        self.rows.append(row)
        return row

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.rows.extend(other.rows)
        return self

    def row(self, name: str) -> ReportRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def sorted_rows(self) -> List[ReportRow]:
        return sorted(self.rows, key=lambda r: r.name)
