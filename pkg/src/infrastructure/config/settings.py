"""Application settings using Pydantic."""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Application settings loaded from SHRINKLP_* environment variables.

    This uses Pydantic for validation and type safety. Experiment
    parameters live in ExperimentConfig; these are process-wide knobs.
    """

    # Application
    app_name: str = "shrinklp"
    app_version: str = "0.1.0"

    # Logging
    log_level: str = "INFO"

    # Sweep execution
    workers: int = Field(default=1, ge=1)
    default_profile: Literal["desk", "paper"] = "desk"
    record_timing: bool = True

    # Solver
    feasibility_tolerance: float = Field(default=1e-7, gt=0.0)
    robust_round_limit: int = Field(default=200, ge=1)
    robust_gap_tolerance: float = Field(default=1e-5, gt=0.0)
    simplex_max_iterations: int | None = Field(default=None, ge=1)  # None: max(1000, 20 (m + p))
    refactor_interval: int = Field(default=100, ge=1)

    # Debug dumps of every solved problem; disabled when unset
    debug_dump_dir: Path | None = None

    model_config = SettingsConfigDict(
        env_prefix="SHRINKLP_",
        env_file=(".env.local", ".env"),  # Try .env.local first, fallback to .env
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level '{value}'")
        return level

    def loaded_env_files(self) -> list[str]:
        """Env files present in the working directory."""
        return [name for name in self.model_config["env_file"] if Path(name).exists()]


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Settings instance
    """
    settings = Settings()
    for name in settings.loaded_env_files():
        logger.debug(f"Found {name} (used for values not already set)")
    return settings
