"""Dataclasses describing persisted CLI configuration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

OutputFormat = Literal["human", "machine"]


@dataclass
class OutputPreferences:
    format: OutputFormat = "human"


@dataclass
class AnalysisPreferences:
    strict: bool = False
    verify_lp: bool = False
    workers: int | None = None
    added_invariant_m: int | None = None

    def is_default(self) -> bool:
        return (
            not self.strict
            and not self.verify_lp
            and self.workers is None
            and self.added_invariant_m is None
        )


@dataclass
class CLIConfig:
    verbosity: str | None = None
    outputs: OutputPreferences = field(default_factory=OutputPreferences)
    analysis: AnalysisPreferences = field(default_factory=AnalysisPreferences)
