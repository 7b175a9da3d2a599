"""Centralized application configuration."""


from functools import lru_cache
from pathlib import Path

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

from core import constants


ENV_FILE = Path(__file__).resolve().with_name(".env")
load_dotenv(ENV_FILE)


class Settings(BaseSettings):
    """Runtime configuration sourced from environment variables."""

    log_level: str = "INFO"
    workers: int = 1  # Monte-Carlo trial threads
    far_field_threshold: float = constants.DEFAULT_FAR_FIELD_THRESHOLD
    bcd_tol: float = constants.DEFAULT_BCD_TOL
    bcd_max_iters: int = constants.DEFAULT_BCD_MAX_ITERS
    ff_iterations: int = constants.DEFAULT_FF_ITERATIONS
    kp_scale: float = constants.DEFAULT_KP_SCALE

    model_config = SettingsConfigDict(
        env_prefix="UAVMIMO_",
        env_file=ENV_FILE,
        env_file_encoding="utf-8",
    )


@lru_cache
def get_settings() -> Settings:
    """Provide a cached settings instance."""

    return Settings()
