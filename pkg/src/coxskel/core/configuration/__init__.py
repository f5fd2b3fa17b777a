"""
Runtime configuration package for coxskel.

Exposes a cohesive facade for caller code while keeping persistence, domain
policies, and environment concerns properly segmented by module.
"""

from __future__ import annotations

from functools import lru_cache

from .constants import (
    CONFIG_DIR_ENV_VAR,
    DEFAULT_VERBOSITY,
    OUTPUT_FORMATS,
    VERBOSITY_ENV_VAR,
    VERBOSITY_PRESETS,
    WORKERS_ENV_VAR,
    config_dir,
    config_file,
)
from .manager import ConfigManager
from .models import AnalysisPreferences, CLIConfig, OutputFormat, OutputPreferences

__all__ = [
    "AnalysisPreferences",
    "CLIConfig",
    "CONFIG_DIR_ENV_VAR",
    "ConfigManager",
    "DEFAULT_VERBOSITY",
    "OUTPUT_FORMATS",
    "OutputFormat",
    "OutputPreferences",
    "VERBOSITY_ENV_VAR",
    "VERBOSITY_PRESETS",
    "WORKERS_ENV_VAR",
    "config_dir",
    "config_file",
    "get_config_manager",
]


@lru_cache(maxsize=1)
def get_config_manager() -> ConfigManager:
    """Return the process-wide configuration manager singleton."""
    return ConfigManager()
