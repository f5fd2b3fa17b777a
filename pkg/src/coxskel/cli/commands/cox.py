"""Implementation of the `cox` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.cox import cox_transform
from coxskel.core.io import SkeletonDocument, document_to_dict

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, OUT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, FormatChoice, format_name
from ..services.exit_codes import handle_errors
from ..services.loader import load_document, run_settings
from ..services.writer import write_document


def register(app: typer.Typer) -> None:
    """Register the `cox` subcommand with the provided Typer app."""

    @app.command()
    def cox(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        out: Path | None = OUT_OPTION,
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
    ) -> None:
        """Write the skeleton of the Cox ring spectrum, with provenance of each divisor."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict)
        with handle_errors(context):
            document = load_document(path, settings)
            result = cox_transform(document.skeleton)
            transformed = SkeletonDocument(result.skeleton, document.conventions, dict(result.provenance))

            if out is None and context.machine:
                context.emit(document_to_dict(transformed))
                return
            write_document(transformed, out, context)

        if out is not None and not context.machine:
            doubled = result.doubled()
            summary = ", ".join(f"{source} → {' + '.join(news)}" for source, news in sorted(doubled.items()))
            context.print(f"[green]Wrote[/] {out}" + (f" (doubled: {summary})" if summary else ""))
