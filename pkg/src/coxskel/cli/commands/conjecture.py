"""Implementation of the `conjecture` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.factorial import reduce_conjecture
from coxskel.core.iota import Verdict, check_conjecture

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, VERIFY_LP_OPTION, FormatChoice, format_name
from ..services.exit_codes import ExitCode, handle_errors
from ..services.loader import invariant_multiplicity, load_document, run_settings
from ..ui import ReportView


def register(app: typer.Typer) -> None:
    """Register the `conjecture` subcommand with the provided Typer app."""

    @app.command()
    def conjecture(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        reduce: bool = typer.Option(
            False,
            "--reduce",
            help="Also check the factorialized skeleton (complete inputs only).",
        ),
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
        verify_lp: bool | None = VERIFY_LP_OPTION,
    ) -> None:
        """Compare ι with dim G/P."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict, verify_lp=verify_lp)
        view = ReportView(context.console)
        with handle_errors(context):
            document = load_document(path, settings)
            if reduce:
                reduction = reduce_conjecture(
                    document.skeleton,
                    invariant_m=invariant_multiplicity(document, settings),
                    solver=settings.solver(),
                )
                verdicts = [reduction.original.verdict, reduction.factorial.verdict]
                if context.machine:
                    context.emit(reduction.to_dict())
                else:
                    view.render_reduction(reduction)
            else:
                result = check_conjecture(document.skeleton, solver=settings.solver())
                verdicts = [result.verdict]
                if context.machine:
                    context.emit(result.to_dict())
                else:
                    view.render_verdict(result)

        if Verdict.VIOLATION in verdicts:
            context.error(f"[red]ι exceeds dim G/P for {path.name}[/]")
            raise typer.Exit(int(ExitCode.VIOLATION))
