"""Implementation of the `configure` subcommand."""

from __future__ import annotations

import typer
from rich.table import Table

from coxskel.core.configuration import VERBOSITY_PRESETS, get_config_manager

from ..bootstrap import bootstrap_runtime
from ..options import FormatChoice


def register(app: typer.Typer) -> None:
    """Register the `configure` subcommand with the provided Typer app."""

    @app.command()
    def configure(  # type: ignore[func-returns-value]
        verbosity: str | None = typer.Option(
            None,
            "--verbosity",
            help=f"Logging verbosity: {', '.join(VERBOSITY_PRESETS)}.",
        ),
        output_format: FormatChoice | None = typer.Option(
            None,
            "--format",
            case_sensitive=False,
            help="Default output format.",
        ),
        workers: int | None = typer.Option(None, "--workers", min=1, help="Default batch parallelism."),
        strict: bool | None = typer.Option(None, "--strict/--no-strict", help="Validate in strict mode by default."),
        verify_lp: bool | None = typer.Option(
            None,
            "--verify-lp/--no-verify-lp",
            help="Cross-check small LPs by default.",
        ),
        added_invariant_m: int | None = typer.Option(
            None,
            "--added-invariant-m",
            min=1,
            help="Default multiplicity of G-invariant divisors added by factorialize.",
        ),
        reset: bool = typer.Option(False, "--reset", help="Restore analysis defaults."),
    ) -> None:
        """Show the effective settings, or persist new defaults."""

        context = bootstrap_runtime("human")
        manager = get_config_manager()

        if verbosity is not None:
            try:
                manager.set_verbosity(verbosity)
            except ValueError as exc:
                raise typer.BadParameter(str(exc), param_hint="--verbosity") from exc
        if output_format is not None:
            manager.set_output_format(output_format.value)
        if reset:
            manager.reset_analysis()
        if any(value is not None for value in (workers, strict, verify_lp, added_invariant_m)):
            manager.update_analysis(
                strict=strict,
                verify_lp=verify_lp,
                workers=workers,
                added_invariant_m=added_invariant_m,
            )

        config = manager.load()
        table = Table(title="coxskel settings", show_header=False)
        table.add_column(style="dim")
        table.add_column()
        table.add_row("config file", str(manager.path) if manager.path else "–")
        table.add_row("verbosity", manager.get_verbosity())
        table.add_row("format", config.outputs.format)
        table.add_row("strict", str(config.analysis.strict).lower())
        table.add_row("verify_lp", str(config.analysis.verify_lp).lower())
        table.add_row("workers", str(manager.resolve_workers()))
        table.add_row("added_invariant_m", str(config.analysis.added_invariant_m or 1))
        context.print(table)
