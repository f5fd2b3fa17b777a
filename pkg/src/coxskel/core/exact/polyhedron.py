"""Halfspace-presented rational polyhedra."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from coxskel.core.errors import DimensionMismatch

from .linalg import Vec, dot, neg, to_vec


@dataclass(frozen=True, slots=True)
class Constraint:
    """The closed halfspace normal·x ≥ rhs."""

    normal: Vec
    rhs: Fraction

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return dot(self.normal, x) >= self.rhs

    def __str__(self) -> str:
        terms = ", ".join(str(a) for a in self.normal)
        return f"({terms})·x ≥ {self.rhs}"


@dataclass(frozen=True, slots=True)
class Polyhedron:
    dim: int
    rows: tuple[Constraint, ...] = ()

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise DimensionMismatch(f"negative dimension {self.dim}")
        for index, row in enumerate(self.rows):
            if len(row.normal) != self.dim:
                raise DimensionMismatch(
                    f"constraint {index} has a normal of length {len(row.normal)} in dimension {self.dim}"
                )

    @classmethod
    def from_rows(
        cls,
        dim: int,
        rows: Iterable[tuple[Iterable[int | str | Fraction], int | str | Fraction]],
    ) -> Polyhedron:
        return cls(dim, tuple(Constraint(to_vec(normal), Fraction(rhs)) for normal, rhs in rows))

    @property
    def normals(self) -> tuple[Vec, ...]:
        return tuple(row.normal for row in self.rows)

    def contains(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return all(row.satisfied_by(x) for row in self.rows)

    def recedes_along(self, ray: Sequence[Fraction]) -> bool:
        """True when ray lies in the recession cone."""

        return all(dot(row.normal, ray) >= 0 for row in self.rows)

    def with_rows(self, extra: Iterable[Constraint]) -> Polyhedron:
        return Polyhedron(self.dim, self.rows + tuple(extra))

    def with_equation(self, normal: Vec, value: Fraction) -> Polyhedron:
        return self.with_rows((Constraint(normal, value), Constraint(neg(normal), -value)))
