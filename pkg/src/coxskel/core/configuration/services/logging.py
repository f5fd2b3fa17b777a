"""Verbosity presets for the log stream on stderr."""

from __future__ import annotations

from ..constants import DEFAULT_VERBOSITY, VERBOSITY_PRESETS
from ..models import CLIConfig
from ..utils import normalize_verbosity_label


def set_verbosity(config: CLIConfig, label: str | None) -> None:
    """Store a verbosity preset; an empty label clears it and an unknown one raises ValueError."""

    if label is None or not label.strip():
        config.verbosity = None
        return
    normalized = normalize_verbosity_label(label)
    if normalized is None:
        raise ValueError(f"Unknown verbosity '{label}'. Options: {', '.join(VERBOSITY_PRESETS)}")
    config.verbosity = normalized


def effective_verbosity(config: CLIConfig) -> str:
    return config.verbosity or DEFAULT_VERBOSITY
