"""Result records for ι and the conjecture checker."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Any

from coxskel.core.exact import Vec

INFINITY = math.inf


def format_value(value: Fraction | float) -> str:
    return "inf" if value == INFINITY else str(value)


def _vec(values: Vec | None) -> list[str] | None:
    return None if values is None else [str(v) for v in values]


@dataclass(frozen=True, slots=True)
class IotaReport:
    """ι as an exact rational or ∞, with the certificate that produced it."""

    value: Fraction | float
    base_term: Fraction
    witness: Vec | None = None
    ray: Vec | None = None
    ambient_witness: Vec | None = None

    @property
    def is_finite(self) -> bool:
        return self.value != INFINITY

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "value": format_value(self.value),
            "base_term": str(self.base_term),
        }
        if self.witness is not None:
            payload["witness"] = _vec(self.witness)
        if self.ray is not None:
            payload["ray"] = _vec(self.ray)
        if self.ambient_witness is not None:
            payload["ambient_witness"] = _vec(self.ambient_witness)
        return payload


class Verdict(StrEnum):
    HOLDS_STRICT = "HoldsStrict"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    VIOLATION = "Violation"
    NOT_COMPLETE = "NotComplete"


@dataclass(frozen=True, slots=True)
class ConjectureVerdict:
    iota: IotaReport
    dim_gp: int
    verdict: Verdict

    def to_dict(self) -> dict[str, Any]:
        return {"iota": self.iota.to_dict(), "dim_gp": self.dim_gp, "verdict": str(self.verdict)}
