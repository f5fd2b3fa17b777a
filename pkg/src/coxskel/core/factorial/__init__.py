"""Factorialization of complete skeletons."""

from __future__ import annotations

from .factorialize import (
    FactorializeStep,
    FactorializeTrace,
    ReductionReport,
    StepCase,
    factorialize,
    reduce_conjecture,
)

__all__ = [
    "FactorializeStep",
    "FactorializeTrace",
    "ReductionReport",
    "StepCase",
    "factorialize",
    "reduce_conjecture",
]
