"""Spherical skeleton data types."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from coxskel.core.errors import DimensionMismatch, DuplicateName
from coxskel.core.exact import Vec, to_vec
from coxskel.core.roots import RootSystem


@dataclass(frozen=True, slots=True)
class Divisor:
    """A B-stable prime divisor: the roots moving it, its values on Σ^sc and its multiplicity."""

    name: str
    varsigma: frozenset[str]
    c: Vec
    m: int = 1

    @classmethod
    def of(
        cls,
        name: str,
        varsigma: Iterable[str],
        c: Iterable[int | str | Fraction],
        m: int = 1,
    ) -> Divisor:
        return cls(name=name, varsigma=frozenset(varsigma), c=to_vec(c), m=m)

    @property
    def is_color(self) -> bool:
        return bool(self.varsigma)

    def renamed(self, name: str) -> Divisor:
        return replace(self, name=name)


def simple_root_multiple(sigma: Sequence[Fraction]) -> tuple[int, Fraction] | None:
    """(node, k) when sigma = k·α_node, otherwise None."""

    support = [i for i, a in enumerate(sigma) if a]
    if len(support) != 1:
        return None
    return support[0], sigma[support[0]]


@dataclass(frozen=True)
class SphericalSkeleton:
    """A root system, the spherically closed spherical roots and the B-stable divisors."""

    rs: RootSystem
    sigma_sc: tuple[Vec, ...]
    divisors: tuple[Divisor, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for index, sigma in enumerate(self.sigma_sc):
            if len(sigma) != self.rs.rank:
                raise DimensionMismatch(
                    f"spherical root {index + 1} has {len(sigma)} coefficients, root system rank is {self.rs.rank}"
                )
        seen: set[str] = set()
        for divisor in self.divisors:
            if divisor.name in seen:
                raise DuplicateName(f"divisor name '{divisor.name}' is used twice")
            seen.add(divisor.name)
            if len(divisor.c) != self.r:
                raise DimensionMismatch(
                    f"divisor '{divisor.name}' has {len(divisor.c)} values for {self.r} spherical roots"
                )
            for label in divisor.varsigma:
                self.rs.index(label)

    @classmethod
    def of(
        cls,
        rs: RootSystem,
        sigma_sc: Iterable[Iterable[int | str | Fraction]],
        divisors: Iterable[Divisor],
        name: str = "",
    ) -> SphericalSkeleton:
        return cls(rs, tuple(to_vec(s) for s in sigma_sc), tuple(divisors), name)

    @property
    def r(self) -> int:
        return len(self.sigma_sc)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.divisors)

    @property
    def c_matrix(self) -> tuple[Vec, ...]:
        return tuple(d.c for d in self.divisors)

    @property
    def colors(self) -> tuple[Divisor, ...]:
        return tuple(d for d in self.divisors if d.varsigma)

    @property
    def g_invariant(self) -> tuple[Divisor, ...]:
        return tuple(d for d in self.divisors if not d.varsigma)

    @property
    def moved_roots(self) -> frozenset[str]:
        """⋃ ς(D) over all divisors."""

        return frozenset().union(*(d.varsigma for d in self.divisors))

    def divisor(self, name: str) -> Divisor:
        for d in self.divisors:
            if d.name == name:
                return d
        raise KeyError(name)

    def colors_moved_by(self, label: str) -> tuple[Divisor, ...]:
        return tuple(d for d in self.divisors if label in d.varsigma)

    def with_divisors(self, divisors: Iterable[Divisor]) -> SphericalSkeleton:
        return SphericalSkeleton(self.rs, self.sigma_sc, tuple(divisors), self.name)

    def with_sigma(self, sigma_sc: Iterable[Vec], divisors: Iterable[Divisor]) -> SphericalSkeleton:
        return SphericalSkeleton(self.rs, tuple(sigma_sc), tuple(divisors), self.name)

    def renamed(self, mapping: Mapping[str, str]) -> SphericalSkeleton:
        return self.with_divisors(d.renamed(mapping.get(d.name, d.name)) for d in self.divisors)

    def fresh_name(self, base: str, suffix: str = "'") -> str:
        taken = set(self.names)
        candidate = base + suffix
        while candidate in taken:
            candidate += "'"
        return candidate
