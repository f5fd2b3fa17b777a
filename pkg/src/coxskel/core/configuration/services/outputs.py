"""Output preference helpers."""

from __future__ import annotations

from ..models import CLIConfig, OutputFormat, OutputPreferences
from ..utils import normalize_output_format


def get_output_preferences(config: CLIConfig) -> OutputPreferences:
    return config.outputs


def set_output_format(config: CLIConfig, value: str) -> OutputFormat:
    config.outputs.format = normalize_output_format(value)
    return config.outputs.format
