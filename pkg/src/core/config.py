"""
Configuration management for icdef.
Defaults only: runs must be reproducible, so neither .env files nor
environment variables are consulted. CLI flags override per invocation.
"""
import os
import logging
from pathlib import Path
from dataclasses import dataclass, field
from typing import Literal
from functools import lru_cache

logger = logging.getLogger(__name__)

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


@dataclass
class OracleConfig:
    """Exhaustive search defaults."""
    node_limit: int = 10**8  # per top-level branch
    deficiency_cap: int = 8
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)


@dataclass
class CompletionConfig:
    """Forced-spectrum completion defaults."""
    node_limit: int = 2_000_000


@dataclass
class Settings:
    """Application settings."""
    log_level: LogLevel = "WARNING"

    # Paths
    fixtures_dir: Path = field(default_factory=lambda: Path(__file__).resolve().parents[2] / "fixtures")

    # Sub-configs
    oracle: OracleConfig = field(default_factory=OracleConfig)
    completion: CompletionConfig = field(default_factory=CompletionConfig)

    def __post_init__(self):
        if self.oracle.workers < 1:
            self.oracle.workers = 1


@lru_cache()
def load_settings() -> Settings:
    """
    Build the settings singleton.
    Uses lru_cache for singleton behavior.
    """
    settings = Settings()
    logger.debug(f"Settings loaded: oracle={settings.oracle}, completion={settings.completion}")
    return settings


# Global settings instance
settings = load_settings()
