"""Settings shared by single-file commands and batch runs."""

from __future__ import annotations

from dataclasses import dataclass

from coxskel.core.exact import LpSolver


@dataclass(frozen=True)
class RunSettings:
    strict: bool = False
    verify_lp: bool = False
    workers: int = 1
    added_invariant_m: int | None = None

    def solver(self) -> LpSolver:
        return LpSolver(cross_check=self.verify_lp)
