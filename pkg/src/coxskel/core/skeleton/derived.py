"""Sets derived from a valid skeleton: root types, colors, 𝒮 and 𝒟^𝒮."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from coxskel.core.exact import LpSolver, cone_is_full

from .models import SphericalSkeleton, simple_root_multiple
from .validation import ensure_valid


@dataclass(frozen=True, slots=True)
class DerivedSets:
    sigma_a: frozenset[str]
    sigma_2a: frozenset[str]
    colors: tuple[str, ...]
    g_invariant: tuple[str, ...]
    script_S: frozenset[str]
    d_script_S: frozenset[str]
    column_of: tuple[tuple[str, int], ...]
    color_of: tuple[tuple[str, str], ...]

    def column(self, label: str) -> int:
        """Index into Σ^sc of the spherical root α or 2α."""

        return dict(self.column_of)[label]

    def color(self, label: str) -> str:
        """The unique color moved by α for 2α ∈ Σ^sc."""

        return dict(self.color_of)[label]


@lru_cache(maxsize=512)
def derived_sets(sk: SphericalSkeleton) -> DerivedSets:
    ensure_valid(sk)
    sigma_a: set[str] = set()
    sigma_2a: set[str] = set()
    column_of: dict[str, int] = {}
    color_of: dict[str, str] = {}
    for index, sigma in enumerate(sk.sigma_sc):
        multiple = simple_root_multiple(sigma)
        if multiple is None:
            continue
        node, k = multiple
        label = sk.rs.labels[node]
        column_of[label] = index
        if k == 1:
            sigma_a.add(label)
        else:
            sigma_2a.add(label)
            color_of[label] = sk.colors_moved_by(label)[0].name

    script_s = frozenset(
        label
        for label in sigma_2a
        if all(d.c[column_of[label]].numerator % 2 == 0 for d in sk.divisors)
    )
    return DerivedSets(
        sigma_a=frozenset(sigma_a),
        sigma_2a=frozenset(sigma_2a),
        colors=tuple(d.name for d in sk.colors),
        g_invariant=tuple(d.name for d in sk.g_invariant),
        script_S=script_s,
        d_script_S=frozenset(color_of[label] for label in script_s),
        column_of=tuple(sorted(column_of.items())),
        color_of=tuple(sorted(color_of.items())),
    )


def is_complete(sk: SphericalSkeleton, *, solver: LpSolver | None = None) -> bool:
    """The values 𝔠(D) positively span the dual of the span of Σ^sc."""

    ensure_valid(sk)
    return cone_is_full(sk.c_matrix, sk.r, solver=solver)


def is_factorial(sk: SphericalSkeleton) -> bool:
    return not derived_sets(sk).script_S
