"""Implementation of the `validate` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.io import decode_skeleton_document, read_text
from coxskel.core.skeleton import validate as validate_skeleton

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, FormatChoice, format_name
from ..services.exit_codes import ExitCode, handle_errors
from ..services.loader import run_settings
from ..ui import ReportView


def register(app: typer.Typer) -> None:
    """Register the `validate` subcommand with the provided Typer app."""

    @app.command()
    def validate(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
    ) -> None:
        """Check a skeleton file against the validation rules."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict)
        with handle_errors(context):
            document = decode_skeleton_document(read_text(path), default_name=path.stem)
        sk = document.skeleton
        violations = validate_skeleton(sk, strict=settings.strict)

        if context.machine:
            context.emit(
                {
                    "file": path.name,
                    "name": sk.name,
                    "valid": not violations,
                    "violations": [v.to_dict() for v in violations],
                }
            )
        else:
            ReportView(context.console).render_validation(sk.name or path.name, violations)

        if violations:
            raise typer.Exit(int(ExitCode.INVALID))
