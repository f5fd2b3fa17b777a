"""Human-readable views of skeletons, invariants and batch reports."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Any

from rich.console import Console
from rich.padding import Padding
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from coxskel.core.cox import ClassGroup
from coxskel.core.factorial import FactorializeTrace, ReductionReport
from coxskel.core.iota import ConjectureVerdict, IotaReport, format_value
from coxskel.core.iso import SkeletonIso
from coxskel.core.report import SkeletonReport
from coxskel.core.skeleton import DerivedSets, SphericalSkeleton, Violation

from .styles import ACCENT, MUTED, flag, vector, verdict_text


def _labels(values: Iterable[str]) -> str:
    items = list(values)
    return ", ".join(items) if items else "∅"


class ReportView:
    """Presentational helpers shared by the analysis commands."""

    def __init__(self, console: Console):
        self.console = console

    def _indent(self, renderable: Any, level: int = 1) -> Padding:
        return Padding(renderable, (0, 0, 0, level * 2))

    def render_header(self, title: str, subtitle: str | None = None) -> None:
        self.console.print(Panel.fit(Text(title, style=f"bold {ACCENT}"), border_style=ACCENT, padding=(0, 2)))
        if subtitle:
            self.console.print(self._indent(Text(subtitle, style=MUTED)))

    def _facts(self, rows: Sequence[tuple[str, Any]]) -> None:
        table = Table.grid(padding=(0, 2))
        table.add_column(style=MUTED)
        table.add_column()
        for key, value in rows:
            table.add_row(key, value if isinstance(value, Text) else Text(str(value)))
        self.console.print(self._indent(table))

    def render_validation(self, name: str, violations: Sequence[Violation]) -> None:
        if not violations:
            self.console.print(Text.assemble(Text("✓ ", style="bold green"), Text(f"{name} is valid")))
            return
        table = Table(title=Text(f"{name}: {len(violations)} violation(s)", style="bold red"))
        table.add_column("rule", style="bold")
        table.add_column("divisor")
        table.add_column("root")
        table.add_column("message")
        for violation in violations:
            table.add_row(violation.rule, violation.divisor or "", violation.root or "", violation.message)
        self.console.print(table)

    def render_info(
        self,
        sk: SphericalSkeleton,
        sets: DerivedSets,
        group: ClassGroup,
        *,
        complete: bool,
        fixed_point: bool,
        dim_gp: int,
    ) -> None:
        self.render_header(sk.name or "skeleton", f"root system {sk.rs.spec}, {sk.r} spherical root(s)")
        self._facts(
            [
                ("Σ^a", _labels(sorted(sets.sigma_a))),
                ("Σ^2a", _labels(sorted(sets.sigma_2a))),
                ("colors", _labels(sets.colors)),
                ("G-invariant", _labels(sets.g_invariant)),
                ("𝒮", _labels(sorted(sets.script_S))),
                ("𝒟^𝒮", _labels(sorted(sets.d_script_S))),
                ("Cl rank", group.rank),
                ("Cl generators", _labels(group.generators)),
                ("complete", flag(complete)),
                ("factorial", flag(not sets.script_S)),
                ("fixed point", flag(fixed_point)),
                ("dim G/P", dim_gp),
            ]
        )

    def render_iota(self, report: IotaReport, *, label: str = "ι") -> None:
        rows: list[tuple[str, Any]] = [
            (label, Text(format_value(report.value), style="bold")),
            ("Σ(m_D − 1)", report.base_term),
        ]
        if report.witness is not None:
            rows.append(("witness ϑ", vector(report.witness)))
        if report.ambient_witness is not None:
            rows.append(("witness θ", vector(report.ambient_witness)))
        if report.ray is not None:
            rows.append(("unbounded ray", vector(report.ray)))
        self._facts(rows)

    def render_verdict(self, verdict: ConjectureVerdict, *, title: str | None = None) -> None:
        if title:
            self.console.print(Text(title, style=f"bold {ACCENT}"))
        self.render_iota(verdict.iota)
        self._facts([("dim G/P", verdict.dim_gp), ("verdict", verdict_text(str(verdict.verdict)))])

    def render_reduction(self, reduction: ReductionReport) -> None:
        self.render_verdict(reduction.original, title="original")
        self.render_verdict(reduction.factorial, title=f"factorialized ({len(reduction.trace.steps)} step(s))")

    def render_trace(self, trace: FactorializeTrace) -> None:
        table = Table(title="factorialization steps", title_style=f"bold {ACCENT}")
        table.add_column("α", style="bold")
        table.add_column("case")
        table.add_column("ϑ")
        table.add_column("ϑ′")
        table.add_column("added")
        for step in trace.steps:
            added = step.added_divisor
            table.add_row(
                step.alpha,
                str(step.case),
                vector(step.theta),
                vector(step.theta_prime),
                f"{added.name} {vector(added.c)}",
            )
        if trace.steps:
            self.console.print(table)
        else:
            self.console.print(Text("already factorial, no steps", style=MUTED))
        self._facts(
            [
                ("ι before", format_value(trace.iota_before.value)),
                ("ι after", format_value(trace.iota_after.value)),
            ]
        )

    def render_iso(self, witness: SkeletonIso | None) -> None:
        if witness is None:
            self.console.print(Text("not isomorphic", style="bold yellow"))
            return
        self.console.print(Text("isomorphic", style="bold green"))
        roots = Table(title="root map", title_style=MUTED)
        roots.add_column("source")
        roots.add_column("target")
        for source, target in witness.phi_R.label_map().items():
            roots.add_row(source, target)
        divisors = Table(title="divisor map", title_style=MUTED)
        divisors.add_column("source")
        divisors.add_column("target")
        for source, target in witness.phi_Delta:
            divisors.add_row(source, target)
        self.console.print(self._indent(roots))
        self.console.print(self._indent(divisors))

    def render_batch(self, reports: Sequence[SkeletonReport]) -> None:
        table = Table(title="skeleton report", title_style=f"bold {ACCENT}")
        for column in ("file", "valid", "𝒮", "Cl", "complete", "fixed pt", "ι", "dim G/P", "verdict"):
            table.add_column(column)
        for report in reports:
            table.add_row(
                report.file,
                flag(report.valid),
                _labels(report.script_S) if report.valid else "",
                "" if report.cl_rank is None else str(report.cl_rank),
                flag(report.complete),
                flag(report.fixed_point),
                report.iota or "",
                "" if report.dim_gp is None else str(report.dim_gp),
                verdict_text(report.verdict),
            )
        self.console.print(table)
        for report in reports:
            for violation in report.violations:
                self.console.print(Text(f"{report.file}: {violation['rule']}: {violation['message']}", style="red"))
            if report.error:
                self.console.print(Text(f"{report.file}: {report.error}", style="red"))
