"""
Runtime Configuration

Settings are read from the environment (and an optional .env file) once,
then shared through get_settings(). CLI flags override them per command.
"""

import os
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field


class Settings(BaseModel):
    """Process-wide defaults for grids, truncation and concurrency"""
    threads: int = Field(1, ge=1, description="Worker cap for parallel stages")
    log_level: str = Field("INFO", description="loguru level name")
    grid_nr: int = Field(128, ge=2, description="Radial node count of the disk grid")
    grid_ntheta: int = Field(256, ge=4, description="Angular node count of the disk grid")
    degree: int = Field(48, ge=1, description="Truncation degree N")
    tol: float = Field(1e-6, gt=0, description="Residual tolerance for solver contracts")
    output_dir: str = Field("reports", description="Directory for verification reports")


def _env(name: str) -> Optional[str]:
    value = os.environ.get(name)
    if value is None or not value.strip():
        return None
    return value.strip()


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings from WOLFFD_* environment variables"""
    load_dotenv()
    values = {}
    mapping = {
        "threads": "WOLFFD_THREADS",
        "log_level": "WOLFFD_LOG_LEVEL",
        "grid_nr": "WOLFFD_GRID_NR",
        "grid_ntheta": "WOLFFD_GRID_NTHETA",
        "degree": "WOLFFD_DEGREE",
        "tol": "WOLFFD_TOL",
        "output_dir": "WOLFFD_OUTPUT_DIR",
    }
    for field_name, env_name in mapping.items():
        raw = _env(env_name)
        if raw is not None:
            values[field_name] = raw
    return Settings(**values)
