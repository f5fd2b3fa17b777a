"""Cartan-preserving bijections between sets of simple roots."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from coxskel.core.errors import DimensionMismatch, UnknownLabel

from .system import RootSystem


@dataclass(frozen=True, slots=True)
class BasedAutomorphism:
    """Node map ``i ↦ images[i]`` from one system's simple roots onto another's."""

    images: tuple[int, ...]
    source_labels: tuple[str, ...]
    target_labels: tuple[str, ...]

    def __call__(self, label: str) -> str:
        try:
            index = self.source_labels.index(label)
        except ValueError:
            raise UnknownLabel(f"'{label}' is not in the domain of this isomorphism") from None
        return self.target_labels[self.images[index]]

    def label_map(self) -> dict[str, str]:
        return {label: self.target_labels[image] for label, image in zip(self.source_labels, self.images, strict=True)}

    def map_labels(self, labels: frozenset[str]) -> frozenset[str]:
        return frozenset(self(label) for label in labels)

    def apply_vector(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Transport a vector in simple-root coordinates."""

        if len(v) != len(self.images):
            raise DimensionMismatch(f"vector of length {len(v)} for a rank-{len(self.images)} map")
        result = [Fraction(0)] * len(self.images)
        for i, image in enumerate(self.images):
            result[image] = Fraction(v[i])
        return tuple(result)

    def compose(self, first: BasedAutomorphism) -> BasedAutomorphism:
        """``self ∘ first``: apply ``first`` then ``self``."""

        if first.target_labels != self.source_labels:
            raise DimensionMismatch("cannot compose maps whose labels do not chain")
        return BasedAutomorphism(
            images=tuple(self.images[image] for image in first.images),
            source_labels=first.source_labels,
            target_labels=self.target_labels,
        )

    def inverse(self) -> BasedAutomorphism:
        images = [0] * len(self.images)
        for i, image in enumerate(self.images):
            images[image] = i
        return BasedAutomorphism(tuple(images), self.target_labels, self.source_labels)

    @property
    def is_identity(self) -> bool:
        return self.source_labels == self.target_labels and all(i == image for i, image in enumerate(self.images))


def _signature(rs: RootSystem, i: int) -> tuple[tuple[Fraction, Fraction], ...]:
    return tuple(
        sorted((rs.cartan_matrix[i][j], rs.cartan_matrix[j][i]) for j in range(rs.rank) if j != i)
    )


def root_isomorphisms(rs1: RootSystem, rs2: RootSystem) -> list[BasedAutomorphism]:
    """Every Cartan-preserving bijection of simple roots, in lexicographic order of images."""

    if rs1.rank != rs2.rank:
        return []
    n = rs1.rank
    a1 = rs1.cartan_matrix
    a2 = rs2.cartan_matrix
    sig1 = [_signature(rs1, i) for i in range(n)]
    sig2 = [_signature(rs2, j) for j in range(n)]
    if sorted(sig1) != sorted(sig2):
        return []

    found: list[BasedAutomorphism] = []
    images: list[int] = []
    used = [False] * n

    def extend(i: int) -> None:
        if i == n:
            found.append(BasedAutomorphism(tuple(images), rs1.labels, rs2.labels))
            return
        for candidate in range(n):
            if used[candidate] or sig2[candidate] != sig1[i]:
                continue
            if any(
                a2[images[k]][candidate] != a1[k][i] or a2[candidate][images[k]] != a1[i][k]
                for k in range(i)
            ):
                continue
            used[candidate] = True
            images.append(candidate)
            extend(i + 1)
            images.pop()
            used[candidate] = False

    extend(0)
    return found


def based_automorphisms(rs: RootSystem) -> list[BasedAutomorphism]:
    """Diagram automorphisms composed with permutations of isomorphic components."""

    return root_isomorphisms(rs, rs)
