"""Implementation of the `info` subcommand."""

from __future__ import annotations

from pathlib import Path

import typer

from coxskel.core.cox import class_group, has_fixed_point
from coxskel.core.roots import dim_gp
from coxskel.core.skeleton import derived_sets, is_complete

from ..bootstrap import bootstrap_runtime
from ..options import FORMAT_OPTION, SKELETON_ARGUMENT, STRICT_OPTION, VERIFY_LP_OPTION, FormatChoice, format_name
from ..services.exit_codes import handle_errors
from ..services.loader import load_document, run_settings
from ..ui import ReportView


def register(app: typer.Typer) -> None:
    """Register the `info` subcommand with the provided Typer app."""

    @app.command()
    def info(  # type: ignore[func-returns-value]
        path: Path = SKELETON_ARGUMENT,
        output_format: FormatChoice | None = FORMAT_OPTION,
        strict: bool | None = STRICT_OPTION,
        verify_lp: bool | None = VERIFY_LP_OPTION,
    ) -> None:
        """Show derived sets, the class group and completeness."""

        context = bootstrap_runtime(format_name(output_format))
        settings = run_settings(strict=strict, verify_lp=verify_lp)
        with handle_errors(context):
            sk = load_document(path, settings).skeleton
            solver = settings.solver()
            sets = derived_sets(sk)
            group = class_group(sk)
            complete = is_complete(sk, solver=solver)
            fixed_point = has_fixed_point(sk, solver=solver)
            moved = dim_gp(sk.rs, sk.moved_roots)

        if context.machine:
            context.emit(
                {
                    "name": sk.name,
                    "root_system": str(sk.rs.spec),
                    "sigma_a": sorted(sets.sigma_a),
                    "sigma_2a": sorted(sets.sigma_2a),
                    "colors": list(sets.colors),
                    "g_invariant": list(sets.g_invariant),
                    "script_S": sorted(sets.script_S),
                    "d_script_S": sorted(sets.d_script_S),
                    "cl_rank": group.rank,
                    "cl_generators": list(group.generators),
                    "source_class_group_free": group.source_class_group_free,
                    "complete": complete,
                    "factorial": not sets.script_S,
                    "fixed_point": fixed_point,
                    "dim_gp": moved,
                }
            )
            return
        ReportView(context.console).render_info(
            sk, sets, group, complete=complete, fixed_point=fixed_point, dim_gp=moved
        )
