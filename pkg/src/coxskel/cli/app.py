"""Typer application wiring for the coxskel CLI."""

from __future__ import annotations

import importlib.metadata

import typer

from .bootstrap import bootstrap_runtime
from .commands.batch import register as register_batch
from .commands.configure import register as register_configure
from .commands.conjecture import register as register_conjecture
from .commands.cox import register as register_cox
from .commands.factorialize import register as register_factorialize
from .commands.info import register as register_info
from .commands.iota import register as register_iota
from .commands.iso import register as register_iso
from .commands.validate import register as register_validate


def _installed_version() -> str:
    try:
        return importlib.metadata.version("coxskel")
    except importlib.metadata.PackageNotFoundError:
        return "0+unknown"


def build_app() -> typer.Typer:
    """Construct the Typer application and register subcommands."""

    app = typer.Typer(
        name="coxskel",
        help="Exact invariants of spherical skeletons and their Cox rings.",
        invoke_without_command=True,
        add_completion=False,
    )

    register_validate(app)
    register_info(app)
    register_cox(app)
    register_iota(app)
    register_conjecture(app)
    register_iso(app)
    register_factorialize(app)
    register_batch(app)
    register_configure(app)

    @app.callback(invoke_without_command=True)
    def main(
        ctx: typer.Context,
        version: bool | None = typer.Option(
            None,
            "--version",
            help="Show the coxskel version and exit.",
        ),
    ) -> None:
        if version:
            context = bootstrap_runtime("human")
            context.console.print(f"coxskel {_installed_version()}")
            raise typer.Exit()

        if ctx.invoked_subcommand is None:
            typer.echo(ctx.get_help())

    return app


app = build_app()
