"""Implementation of the `iso` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.errors import CertificateError
from coxskel.core.iso import are_isomorphic, verify_isomorphism

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, FormatChoice, format_name
from ..services.exit_codes import handle_errors
from ..services.loader import load_document, run_settings
from ..ui import ReportView

SECOND_SKELETON_ARGUMENT = typer.Argument(
    ...,
    exists=True,
    file_okay=True,
    dir_okay=False,
    readable=True,
    help="Skeleton file to compare against.",
)


def register(app: typer.Typer) -> None:
    """Register the `iso` subcommand with the provided Typer app."""

    @app.command()
    def iso(  # type: ignore[func-returns-value]
        first: Path = SKELETON_ARGUMENT,
        second: Path = SECOND_SKELETON_ARGUMENT,
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
    ) -> None:
        """Decide whether two skeletons are isomorphic and print a witness."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict)
        with handle_errors(context):
            sk1 = load_document(first, settings).skeleton
            sk2 = load_document(second, settings).skeleton
            witness = are_isomorphic(sk1, sk2)
            if witness is not None and not verify_isomorphism(sk1, sk2, witness):
                raise CertificateError("isomorphism witness failed re-verification")

        if context.machine:
            context.emit({"isomorphic": witness is not None, "witness": witness.to_dict() if witness else None})
            return
        ReportView(context.console).render_iso(witness)
