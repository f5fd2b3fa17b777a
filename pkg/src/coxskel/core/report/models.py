"""Per-file report records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class SkeletonReport:
    """Everything the batch table shows about one skeleton file."""

    file: str
    name: str
    valid: bool
    violations: tuple[dict[str, str], ...] = ()
    script_S: tuple[str, ...] = ()
    cl_rank: int | None = None
    cl_generators: tuple[str, ...] = ()
    complete: bool | None = None
    factorial: bool | None = None
    fixed_point: bool | None = None
    iota: str | None = None
    iota_affine: str | None = None
    dim_gp: int | None = None
    verdict: str | None = None
    error: str | None = None

    @property
    def is_violation(self) -> bool:
        return self.verdict == "Violation"

    @property
    def failed(self) -> bool:
        return not self.valid or self.error is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "file": self.file,
            "name": self.name,
            "valid": self.valid,
            "violations": list(self.violations),
            "script_S": list(self.script_S),
            "cl_rank": self.cl_rank,
            "cl_generators": list(self.cl_generators),
            "complete": self.complete,
            "factorial": self.factorial,
            "fixed_point": self.fixed_point,
            "iota": self.iota,
            "iota_affine": self.iota_affine,
            "dim_gp": self.dim_gp,
            "verdict": self.verdict,
            "error": self.error,
        }


@dataclass(frozen=True)
class BatchSummary:
    reports: tuple[SkeletonReport, ...]

    @property
    def exit_code(self) -> int:
        if any(report.is_violation for report in self.reports):
            return 2
        if any(report.failed for report in self.reports):
            return 1
        return 0

    def to_list(self) -> list[dict[str, Any]]:
        return [report.to_dict() for report in self.reports]
