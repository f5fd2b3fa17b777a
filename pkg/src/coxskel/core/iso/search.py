"""Isomorphism of spherical skeletons."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from coxskel.core.errors import DimensionMismatch
from coxskel.core.exact import Vec
from coxskel.core.roots import BasedAutomorphism, root_isomorphisms
from coxskel.core.skeleton import SphericalSkeleton, ensure_valid

Signature = tuple[Vec, tuple[str, ...], int]


@dataclass(frozen=True)
class SkeletonIso:
    """A root-system isomorphism together with a bijection of divisors."""

    phi_R: BasedAutomorphism
    phi_Delta: tuple[tuple[str, str], ...]

    def divisor_map(self) -> dict[str, str]:
        return dict(self.phi_Delta)

    def inverse(self) -> SkeletonIso:
        return SkeletonIso(
            phi_R=self.phi_R.inverse(),
            phi_Delta=tuple(sorted((target, source) for source, target in self.phi_Delta)),
        )

    def compose(self, first: SkeletonIso) -> SkeletonIso:
        """``self ∘ first``."""

        second = self.divisor_map()
        return SkeletonIso(
            phi_R=self.phi_R.compose(first.phi_R),
            phi_Delta=tuple((source, second[middle]) for source, middle in first.phi_Delta),
        )

    def to_dict(self) -> dict[str, Any]:
        return {"phi_R": self.phi_R.label_map(), "phi_Delta": dict(self.phi_Delta)}


def _ray_match(
    sk1: SphericalSkeleton,
    sk2: SphericalSkeleton,
    phi: BasedAutomorphism,
) -> list[tuple[int, Fraction]] | None:
    """For each σ ∈ Σ₁^sc the index j and q > 0 with σ′_j = q·φ(σ), or None."""

    matches: list[tuple[int, Fraction]] = []
    used: set[int] = set()
    for sigma in sk1.sigma_sc:
        image = phi.apply_vector(sigma)
        pivot = next(i for i, a in enumerate(image) if a)
        found = None
        for j, target in enumerate(sk2.sigma_sc):
            if j in used or target[pivot] == 0:
                continue
            q = target[pivot] / image[pivot]
            if q > 0 and all(t == q * a for t, a in zip(target, image, strict=True)):
                found = (j, q)
                break
        if found is None:
            return None
        used.add(found[0])
        matches.append(found)
    return matches


def _transport(c2: Vec, rays: list[tuple[int, Fraction]]) -> Vec:
    """Values of a divisor of sk2 on φ(σ) for σ ∈ Σ₁^sc."""

    return tuple(c2[j] / q for j, q in rays)


def _witness(sk1: SphericalSkeleton, sk2: SphericalSkeleton, phi: BasedAutomorphism) -> SkeletonIso | None:
    rays = _ray_match(sk1, sk2, phi)
    if rays is None:
        return None
    wanted: list[Signature] = [(d.c, tuple(sorted(phi.map_labels(d.varsigma))), d.m) for d in sk1.divisors]
    offered: list[Signature] = [(_transport(d.c, rays), tuple(sorted(d.varsigma)), d.m) for d in sk2.divisors]
    if Counter(wanted) != Counter(offered):
        return None
    used = [False] * len(offered)
    pairs: list[tuple[str, str]] = []
    for d, signature in zip(sk1.divisors, wanted, strict=True):
        j = next(k for k, s in enumerate(offered) if not used[k] and s == signature)
        used[j] = True
        pairs.append((d.name, sk2.divisors[j].name))
    return SkeletonIso(phi, tuple(pairs))


def are_isomorphic(sk1: SphericalSkeleton, sk2: SphericalSkeleton) -> SkeletonIso | None:
    """The least witness in (φ_R, φ_Δ) order, or None.

    Divisors are matched by their full signature (values on Σ₁^sc, transported
    ς, multiplicity); the first unused divisor of sk2 with the right signature
    is taken, which succeeds exactly when the signature multisets agree.
    """

    ensure_valid(sk1)
    ensure_valid(sk2)
    if (
        sk1.rs.rank != sk2.rs.rank
        or sk1.r != sk2.r
        or len(sk1.divisors) != len(sk2.divisors)
        or sorted(d.m for d in sk1.divisors) != sorted(d.m for d in sk2.divisors)
        or len(sk1.colors) != len(sk2.colors)
    ):
        return None
    for phi in root_isomorphisms(sk1.rs, sk2.rs):
        witness = _witness(sk1, sk2, phi)
        if witness is not None:
            return witness
    return None


def verify_isomorphism(sk1: SphericalSkeleton, sk2: SphericalSkeleton, witness: SkeletonIso) -> bool:
    """Re-check every defining condition of a witness from scratch."""

    phi = witness.phi_R
    if phi.source_labels != sk1.rs.labels or phi.target_labels != sk2.rs.labels:
        return False
    a1, a2 = sk1.rs.cartan_matrix, sk2.rs.cartan_matrix
    n = sk1.rs.rank
    if sorted(phi.images) != list(range(n)):
        return False
    if any(a2[phi.images[i]][phi.images[j]] != a1[i][j] for i in range(n) for j in range(n)):
        return False
    try:
        rays = _ray_match(sk1, sk2, phi)
    except DimensionMismatch:
        return False
    if rays is None or len(rays) != sk2.r:
        return False

    mapping = witness.divisor_map()
    if sorted(mapping) != sorted(sk1.names) or sorted(mapping.values()) != sorted(sk2.names):
        return False
    for d in sk1.divisors:
        image = sk2.divisor(mapping[d.name])
        if image.m != d.m or phi.map_labels(d.varsigma) != image.varsigma:
            return False
        if _transport(image.c, rays) != d.c:
            return False
    return True
