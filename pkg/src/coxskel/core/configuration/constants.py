"""Constants used throughout the configuration subsystem."""

from __future__ import annotations

import logging
import os
from pathlib import Path

from platformdirs import user_config_dir

CONFIG_DIR_ENV_VAR = "COXSKEL_CONFIG_DIR"
CONFIG_FILENAME = "config.toml"

DEFAULT_VERBOSITY = "quiet"
VERBOSITY_ENV_VAR = "COXSKEL_LOG_LEVEL"
VERBOSITY_PRESETS = {
    "quiet": logging.WARNING,
    "standard": logging.INFO,
    "verbose": logging.DEBUG,
}

WORKERS_ENV_VAR = "COXSKEL_WORKERS"
DEFAULT_WORKERS = 1

OUTPUT_FORMATS = ("human", "machine")


def config_dir() -> Path:
    return Path(os.getenv(CONFIG_DIR_ENV_VAR) or user_config_dir("coxskel", "coxskel"))


def config_file() -> Path:
    return config_dir() / CONFIG_FILENAME
