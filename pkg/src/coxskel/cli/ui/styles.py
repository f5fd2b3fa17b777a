"""Shared colors and badges for Rich output."""

from __future__ import annotations

from rich.text import Text

ACCENT = "#00d1b2"
MUTED = "dim"

VERDICT_STYLES = {
    "HoldsStrict": "bold green",
    "HoldsWithEquality": "bold cyan",
    "Violation": "bold red",
    "NotComplete": "bold yellow",
}


def flag(value: bool | None) -> Text:
    """Return a color-coded yes/no badge; None renders as a dash."""

    if value is None:
        return Text("–", style=MUTED)
    return Text("yes", style="green") if value else Text("no", style="red")


def verdict_text(verdict: str | None) -> Text:
    if verdict is None:
        return Text("–", style=MUTED)
    return Text(verdict, style=VERDICT_STYLES.get(verdict, "bold"))


def vector(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"
