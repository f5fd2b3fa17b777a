"""Shared bootstrap helpers for CLI commands."""

from __future__ import annotations

from pathlib import Path

from dotenv import load_dotenv
from rich.console import Console

from coxskel.core.configuration import get_config_manager
from coxskel.core.logging import configure_logging

from .context import CliContext


def _load_env_files() -> None:
    env_path = Path(".env")
    if env_path.exists():
        load_dotenv(env_path)


def bootstrap_runtime(output_format: str | None = None) -> CliContext:
    """Load environment overrides, configure logging, and return a CLI context."""

    _load_env_files()
    manager = get_config_manager()
    configure_logging(level=manager.resolve_log_level())

    resolved = manager.get_output_format() if output_format is None else output_format
    return CliContext(
        console=Console(),
        err_console=Console(stderr=True),
        output_format="machine" if resolved == "machine" else "human",
    )
