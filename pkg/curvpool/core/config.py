"""
Configuration management for curvpool.

This module provides centralized configuration management using Pydantic settings.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

# Only generator with a documented, platform-independent stream in numpy.
PINNED_RNG_ALGORITHM = "PCG64"


class Config(BaseSettings):
    """curvpool configuration settings."""

    # Logging settings
    log_level: str = Field(default="WARNING", alias="CURVPOOL_LOG_LEVEL")
    log_file: Optional[Path] = Field(default=None, alias="CURVPOOL_LOG_FILE")
    log_json: bool = Field(default=False, alias="CURVPOOL_LOG_JSON")
    log_format: str = Field(
        default="%(message)s",
        alias="CURVPOOL_LOG_FORMAT",
    )

    # Generation settings
    rng_algorithm: str = Field(default=PINNED_RNG_ALGORITHM, alias="CURVPOOL_RNG_ALGORITHM")

    # Analysis settings
    default_bins: int = Field(default=40, alias="CURVPOOL_DEFAULT_BINS")
    histogram_precision: int = Field(default=17, alias="CURVPOOL_HISTOGRAM_PRECISION")

    # Performance settings
    default_threads: int = Field(default=0, alias="CURVPOOL_THREADS")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v.upper()

    @field_validator("rng_algorithm")
    @classmethod
    def validate_rng_algorithm(cls, v):
        """Only the pinned generator is accepted."""
        if v.upper() != PINNED_RNG_ALGORITHM:
            raise ValueError(f"RNG algorithm is pinned to {PINNED_RNG_ALGORITHM}, got {v}")
        return PINNED_RNG_ALGORITHM

    @field_validator("default_bins")
    @classmethod
    def validate_bins(cls, v):
        if v < 1:
            raise ValueError("default_bins must be >= 1")
        return v

    @field_validator("default_threads")
    @classmethod
    def validate_threads(cls, v):
        if v < 0:
            raise ValueError("default_threads must be >= 0 (0 means all cores)")
        return v

    def resolve_threads(self, requested: Optional[int] = None) -> int:
        """Turn a thread request (None/0 = config default/all cores) into a worker count."""
        threads = self.default_threads if requested is None else requested
        if threads <= 0:
            return os.cpu_count() or 1
        return threads

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration."""
        return {
            "level": self.log_level,
            "file": str(self.log_file) if self.log_file else None,
            "json": self.log_json,
        }

    def get_analysis_config(self) -> Dict[str, Any]:
        """Get analysis configuration."""
        return {
            "bins": self.default_bins,
            "histogram_precision": self.histogram_precision,
            "rng_algorithm": self.rng_algorithm,
            "threads": self.default_threads,
        }


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = Config()
    return _config


def reload_config() -> Config:
    """Reload configuration from environment."""
    global _config
    _config = Config()
    return _config


def set_config(config: Config) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config
