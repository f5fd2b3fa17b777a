"""Type/rank descriptions of finite reduced root systems."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from coxskel.core.errors import InadmissibleSpec

MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
MAX_RANK = {"E": 8, "F": 4, "G": 2}


@dataclass(frozen=True, slots=True)
class ComponentSpec:
    type: str
    rank: int

    def __post_init__(self) -> None:
        if self.type not in MIN_RANK:
            raise InadmissibleSpec(f"unknown root system type '{self.type}'")
        if isinstance(self.rank, bool) or not isinstance(self.rank, int):
            raise InadmissibleSpec(f"rank of {self.type} must be an integer, got {self.rank!r}")
        low = MIN_RANK[self.type]
        high = MAX_RANK.get(self.type)
        if self.rank < low or (high is not None and self.rank > high):
            bound = f"{low}..{high}" if high is not None else f"≥ {low}"
            raise InadmissibleSpec(f"type {self.type} requires rank {bound}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.type}{self.rank}"


@dataclass(frozen=True, slots=True)
class RootSystemSpec:
    """Ordered list of simple components."""

    components: tuple[ComponentSpec, ...]

    @classmethod
    def of(cls, *components: tuple[str, int]) -> RootSystemSpec:
        return cls(tuple(ComponentSpec(t.upper(), r) for t, r in components))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> RootSystemSpec:
        return cls.of(*pairs)

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def __str__(self) -> str:
        return "×".join(str(c) for c in self.components) or "∅"
