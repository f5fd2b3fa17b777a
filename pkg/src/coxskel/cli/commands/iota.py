"""Implementation of the `iota` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.iota import iota as compute_iota
from coxskel.core.iota import iota_affine

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, VERIFY_LP_OPTION, FormatChoice, format_name
from ..services.exit_codes import handle_errors
from ..services.loader import load_document, run_settings
from ..ui import ReportView


def register(app: typer.Typer) -> None:
    """Register the `iota` subcommand with the provided Typer app."""

    @app.command()
    def iota(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        affine: bool = typer.Option(
            False,
            "--affine",
            help="Compute ι through the affine Cox ring description (factorial inputs only).",
        ),
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
        verify_lp: bool | None = VERIFY_LP_OPTION,
    ) -> None:
        """Print ι exactly, with its optimal point or unbounded ray."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict, verify_lp=verify_lp)
        with handle_errors(context):
            sk = load_document(path, settings).skeleton
            compute = iota_affine if affine else compute_iota
            report = compute(sk, solver=settings.solver())

        if context.machine:
            context.emit(report.to_dict())
            return
        ReportView(context.console).render_iota(report, label="ι (affine)" if affine else "ι")
