from .problem import GridSpec, MultiplierFile, ProblemFile, RadicalFile, SolutionFile
from .report import ReportRow, VerificationReport

__all__ = ["GridSpec", "MultiplierFile", "ProblemFile", "RadicalFile", "ReportRow", "SolutionFile", "VerificationReport"]
