"""Analysis preference helpers: strictness, LP cross-checks and batch workers."""

from __future__ import annotations

from ..models import AnalysisPreferences, CLIConfig
from ..utils import coerce_positive_int


def get_analysis_preferences(config: CLIConfig) -> AnalysisPreferences:
    return config.analysis


def set_strict(config: CLIConfig, enabled: bool) -> None:
    config.analysis.strict = bool(enabled)


def set_verify_lp(config: CLIConfig, enabled: bool) -> None:
    config.analysis.verify_lp = bool(enabled)


def set_workers(config: CLIConfig, value: int | None) -> None:
    config.analysis.workers = coerce_positive_int(value)


def set_added_invariant_m(config: CLIConfig, value: int | None) -> None:
    config.analysis.added_invariant_m = coerce_positive_int(value)


def reset(config: CLIConfig) -> None:
    config.analysis = AnalysisPreferences()
