"""Context primitives shared across CLI modules."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from rich.console import Console

from coxskel.core.configuration import OutputFormat


@dataclass
class CliContext:
    """Lightweight container for objects shared by CLI handlers."""

    console: Console
    err_console: Console
    output_format: OutputFormat = "human"

    @property
    def machine(self) -> bool:
        return self.output_format == "machine"

    def print(self, *args, **kwargs) -> None:
        """Convenience wrapper around the Rich console print method."""

        self.console.print(*args, **kwargs)

    def error(self, message: str) -> None:
        self.err_console.print(message)

    def emit(self, payload: Any) -> None:
        """Write a JSON document to the output stream."""

        self.console.out(to_json(payload), highlight=False)

    def write_text(self, text: str) -> None:
        self.console.out(text, end="", highlight=False)


def to_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
