"""The invariant ι and the conjecture checker."""

from __future__ import annotations

from .conjecture import check_conjecture, classify
from .invariant import base_term, iota, iota_affine, iota_objective, iota_polyhedron
from .models import INFINITY, ConjectureVerdict, IotaReport, Verdict, format_value

__all__ = [
    "INFINITY",
    "ConjectureVerdict",
    "IotaReport",
    "Verdict",
    "base_term",
    "check_conjecture",
    "classify",
    "format_value",
    "iota",
    "iota_affine",
    "iota_objective",
    "iota_polyhedron",
]
