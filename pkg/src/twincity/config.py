"""Configuration management using Pydantic Settings."""

from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Kernel settings with env override support.

    Settings are loaded from:
    1. Default values
    2. config/settings.yaml (if exists)
    3. Environment variables (TWINCITY_ prefix)
    """

    model_config = SettingsConfigDict(
        env_prefix="TWINCITY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Series precision schedule for rational Bruhat labels
    precision_start: int = 8
    precision_cap: int = 512

    # Interval refinement for annulus grades (bits)
    interval_bits_start: int = 53
    interval_bits_cap: int = 256

    # Elimination iteration cap multiplier (cap = factor * n^2 * span)
    iteration_factor: int = 4

    # Brute-force oracle bounds
    oracle_truncation: int = 3
    oracle_max_length: int = 4

    # Property suites
    check_workers: int = 1

    # Logging
    log_level: str = "WARNING"
    log_file: str | None = None

    # Output
    schema_version: int = 1


def load_yaml_config(config_path: Path | str = "config/settings.yaml") -> dict[str, Any]:
    """Load configuration from YAML file."""
    config_path = Path(config_path)
    if config_path.exists():
        with open(config_path, encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    return {}


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    YAML values act as defaults; environment variables win over them.
    """
    yaml_config = load_yaml_config()
    settings = Settings()
    overrides = {
        key: value
        for key, value in yaml_config.items()
        if key in Settings.model_fields and key not in settings.model_fields_set
    }
    return Settings(**overrides) if overrides else settings
