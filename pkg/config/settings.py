"""
Application Settings for the WQH free divisor toolkit
"""

import logging
from typing import List, Literal

from pydantic import Field
from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Application configuration settings."""

    # Paths
    OUTPUT_DIR: str = Field(default="output")
    LOG_DIR: str = Field(default="logs")
    DIVISOR_REGISTRY: str = Field(default="config/divisor_registry.yaml")
    DIVISOR_CONFIG_DIR: str = Field(default="config/divisors")

    # Logging
    LOG_LEVEL: str = Field(default="INFO")
    LOG_FILE: str = Field(default="wqh_toolkit.log")
    STRUCTURED_LOGGING: bool = Field(default=False)
    SAVE_REPORTS: bool = Field(default=False)

    # Algebra
    MONOMIAL_ORDER: Literal["degrevlex", "lex", "weighted"] = Field(default="degrevlex")

    # Session defaults (overridden by config files and flags)
    DEFAULT_SEED: int = Field(default=0)
    DEFAULT_DEGREE_BOUND: int = Field(default=6)
    DEFAULT_K: List[int] = Field(default=[1])
    DEFAULT_FORMAT: Literal["text", "json"] = Field(default="text")

    # Randomized checks
    RANDOM_SAMPLES: int = Field(default=10)
    RANDOM_TERMS: int = Field(default=4)
    ORACLE_MAX_WEIGHT: str = Field(default="1")

    # Per-level verification pool
    MAX_WORKERS: int = Field(default=1)

    # Pydantic v2 configuration
    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": True,
        "extra": "ignore"
    }


# Global settings instance
settings = Settings()


# Validate configuration
def validate_config():
    """Validate configuration."""
    if settings.LOG_LEVEL.upper() not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
        raise ValueError(f"Invalid LOG_LEVEL: {settings.LOG_LEVEL}")

    if settings.RANDOM_SAMPLES < 0:
        raise ValueError(f"Invalid RANDOM_SAMPLES: {settings.RANDOM_SAMPLES}")

    if settings.MAX_WORKERS < 1:
        raise ValueError(f"Invalid MAX_WORKERS: {settings.MAX_WORKERS}")

    if any(k < 0 for k in settings.DEFAULT_K):
        raise ValueError(f"Invalid DEFAULT_K: {settings.DEFAULT_K}")

    if settings.MONOMIAL_ORDER == "weighted":
        logger.warning("MONOMIAL_ORDER is 'weighted': the session weight vector drives the order")


validate_config()
