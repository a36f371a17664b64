"""
Weylham - Runtime Settings
Purpose: Environment-driven configuration (WEYLHAM_* variables and .env)
Version: 1.0.0
Date: 2026-10-19
"""

import logging
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class WeylhamSettings(BaseSettings):
    """
    Defaults for every tunable used by the core modules and the CLI.

    Each field maps to WEYLHAM_<FIELD>; CLI flags override these per call.
    """

    model_config = SettingsConfigDict(env_prefix="WEYLHAM_", env_file=".env", extra="ignore")

    data_dir: Optional[Path] = Field(None, description="Directory holding external datasets")
    time_budget: float = Field(60.0, gt=0, description="Seconds per Hamiltonian search")
    threads: int = Field(1, ge=1, description="Worker processes for backtracking")
    deterministic: bool = Field(True, description="Ascending-label branch order")
    seed: int = Field(0, ge=0, description="Branch shuffling seed")
    log_level: str = Field("INFO", description="Root log level")
    string_cap: int = Field(10_000, gt=0, description="Longest root string before Unbounded")
    bfs_cap: int = Field(10**7, gt=0, description="Most bases or group elements a BFS may enumerate")
    orbit_cap: int = Field(10_000, gt=0, description="Largest base orbit for super data")
    d21_parameter: str = Field("5/3", description="Default x for the D(2,1;x) family")

    @field_validator("log_level")
    @classmethod
    def check_level(cls, v: str) -> str:
        if v.upper() not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return v.upper()

    @field_validator("d21_parameter")
    @classmethod
    def check_parameter(cls, v: str) -> str:
        try:
            Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"d21_parameter must be a rational, got {v!r}") from e
        return v

    def validate_directories(self) -> list[str]:
        """Problems with configured directories; empty when all is well."""
        errors = []
        if self.data_dir is not None and not self.data_dir.is_dir():
            errors.append(f"WEYLHAM_DATA_DIR is not a directory: {self.data_dir}")
        return errors


@lru_cache(maxsize=1)
def get_settings() -> WeylhamSettings:
    """Load .env once and return the cached settings."""
    load_dotenv(override=False)
    settings = WeylhamSettings()
    for problem in settings.validate_directories():
        logger.warning(problem)
    return settings


__all__ = ["WeylhamSettings", "get_settings"]
