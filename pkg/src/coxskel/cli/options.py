"""Option and argument declarations shared by several commands."""

from __future__ import annotations

from enum import StrEnum

import typer


class FormatChoice(StrEnum):
    HUMAN = "human"
    MACHINE = "machine"


SKELETON_ARGUMENT = typer.Argument(
    ...,
    exists=True,
    file_okay=True,
    dir_okay=False,
    readable=True,
    help="Skeleton file (.skel, TOML).",
)
FORMAT_OPTION = typer.Option(
    None,
    "--format",
    "-f",
    case_sensitive=False,
    help="Output format; defaults to the configured preference.",
)
STRICT_OPTION = typer.Option(
    None,
    "--strict/--no-strict",
    help="Treat convention choices (m of G-invariant divisors) as validation errors.",
)
VERIFY_LP_OPTION = typer.Option(
    None,
    "--verify-lp/--no-verify-lp",
    help="Cross-check every small LP against vertex enumeration.",
)
OUT_OPTION = typer.Option(
    None,
    "--out",
    "-o",
    dir_okay=False,
    writable=True,
    help="Write the resulting skeleton file here instead of the output stream.",
)


def format_name(choice: FormatChoice | None) -> str | None:
    return None if choice is None else choice.value
