"""Implementation of the `factorialize` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.factorial import factorialize as run_factorialize
from coxskel.core.io import SkeletonDocument, document_to_dict, format_skeleton_document

from ..bootstrap import bootstrap_runtime
from ..options import (
    FORMAT_OPTION,
    OUT_OPTION,
    SKELETON_ARGUMENT,
    STRICT_OPTION,
    VERIFY_LP_OPTION,
    FormatChoice,
    format_name,
)
from ..services.exit_codes import handle_errors
from ..services.loader import invariant_multiplicity, load_document, run_settings
from ..services.writer import write_document
from ..ui import ReportView


def register(app: typer.Typer) -> None:
    """Register the `factorialize` subcommand with the provided Typer app."""

    @app.command()
    def factorialize(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        out: Path | None = OUT_OPTION,
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
        verify_lp: bool | None = VERIFY_LP_OPTION,
    ) -> None:
        """Write a factorial skeleton dominating a complete one, with the step trace."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict, verify_lp=verify_lp)
        with handle_errors(context):
            document = load_document(path, settings)
            result, trace = run_factorialize(
                document.skeleton,
                invariant_m=invariant_multiplicity(document, settings),
                solver=settings.solver(),
            )
            output = SkeletonDocument(result, document.conventions)
            if out is not None:
                write_document(output, out, context)

        if context.machine:
            payload = {"trace": trace.to_dict()}
            if out is None:
                payload["skeleton"] = document_to_dict(output)
            context.emit(payload)
            return
        ReportView(context.console).render_trace(trace)
        if out is None:
            context.print()
            context.write_text(format_skeleton_document(output))
        else:
            context.print(f"[green]Wrote[/] {out}")
