"""Implementation of the `batch` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.report import run_batch

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, STRICT_OPTION, VERIFY_LP_OPTION, FormatChoice, format_name
from ..services.loader import run_settings
from ..ui import ReportView

DIRECTORY_ARGUMENT = typer.Argument(
    ...,
    exists=True,
    dir_okay=True,
    file_okay=False,
    resolve_path=True,
    help="Directory containing .skel files.",
)


def register(app: typer.Typer) -> None:
    """Register the `batch` subcommand with the provided Typer app."""

    @app.command()
    def batch(  # type: ignore[func-returns-value]
        directory: Path = DIRECTORY_ARGUMENT,
        workers: int | None = typer.Option(
            None,
            "--workers",
            "-w",
            min=1,
            help="Number of files evaluated in parallel.",
        ),
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
        verify_lp: bool | None = VERIFY_LP_OPTION,
    ) -> None:
        """Evaluate every skeleton file in a directory; one report per file, sorted by name."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict, verify_lp=verify_lp, workers=workers)
        summary = run_batch(directory, settings)

        if context.machine:
            context.emit(summary.to_list())
        else:
            ReportView(context.console).render_batch(summary.reports)

        if summary.exit_code:
            raise typer.Exit(summary.exit_code)
