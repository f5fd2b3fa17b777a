"""High-level facade for runtime configuration operations."""

from __future__ import annotations

from collections.abc import MutableMapping
from pathlib import Path

from coxskel.core.report import RunSettings

from .environment import EnvironmentManager
from .models import AnalysisPreferences, CLIConfig, OutputFormat
from .repository import ConfigRepository, TomlConfigRepository
from .services import analysis, outputs
from .services import logging as logging_service


class ConfigManager:
    """Coordinates persistence, policy helpers, and environment behavior."""

    def __init__(
        self,
        repository: ConfigRepository | None = None,
        environ: MutableMapping[str, str] | None = None,
    ) -> None:
        self._repository = repository or TomlConfigRepository()
        self._environment = EnvironmentManager(environ)

    # ------------------------------------------------------------------
    # Core persistence helpers
    # ------------------------------------------------------------------
    def load(self) -> CLIConfig:
        return self._repository.load()

    def save(self, config: CLIConfig) -> None:
        self._repository.save(config)

    @property
    def path(self) -> Path | None:
        return getattr(self._repository, "path", None)

    # ------------------------------------------------------------------
    # Logging preferences
    # ------------------------------------------------------------------
    def set_verbosity(self, label: str | None) -> CLIConfig:
        config = self._repository.load()
        logging_service.set_verbosity(config, label)
        self._repository.save(config)
        return config

    def get_verbosity(self) -> str:
        return logging_service.effective_verbosity(self._repository.load())

    def resolve_log_level(self, default: int | None = None) -> int:
        return self._environment.resolve_log_level(self._repository.load(), default)

    # ------------------------------------------------------------------
    # Output preferences
    # ------------------------------------------------------------------
    def get_output_format(self) -> OutputFormat:
        return outputs.get_output_preferences(self._repository.load()).format

    def set_output_format(self, value: str) -> CLIConfig:
        config = self._repository.load()
        outputs.set_output_format(config, value)
        self._repository.save(config)
        return config

    # ------------------------------------------------------------------
    # Analysis preferences
    # ------------------------------------------------------------------
    def get_analysis_preferences(self) -> AnalysisPreferences:
        return analysis.get_analysis_preferences(self._repository.load())

    def update_analysis(
        self,
        *,
        strict: bool | None = None,
        verify_lp: bool | None = None,
        workers: int | None = None,
        added_invariant_m: int | None = None,
    ) -> CLIConfig:
        config = self._repository.load()
        if strict is not None:
            analysis.set_strict(config, strict)
        if verify_lp is not None:
            analysis.set_verify_lp(config, verify_lp)
        if workers is not None:
            analysis.set_workers(config, workers)
        if added_invariant_m is not None:
            analysis.set_added_invariant_m(config, added_invariant_m)
        self._repository.save(config)
        return config

    def reset_analysis(self) -> CLIConfig:
        config = self._repository.load()
        analysis.reset(config)
        self._repository.save(config)
        return config

    def resolve_workers(self) -> int:
        return self._environment.resolve_workers(self._repository.load())

    def build_run_settings(
        self,
        *,
        strict: bool | None = None,
        verify_lp: bool | None = None,
        workers: int | None = None,
    ) -> RunSettings:
        """Merge persisted preferences with per-invocation flags."""

        config = self._repository.load()
        prefs = config.analysis
        return RunSettings(
            strict=prefs.strict if strict is None else strict,
            verify_lp=prefs.verify_lp if verify_lp is None else verify_lp,
            workers=workers if workers is not None else self._environment.resolve_workers(config),
            added_invariant_m=prefs.added_invariant_m,
        )
