"""The skeleton of the total coordinate space Spec R(X)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from coxskel.core.errors import CertificateError
from coxskel.core.exact import Vec, scale
from coxskel.core.skeleton import Divisor, SphericalSkeleton, derived_sets, validate

logger = logging.getLogger("coxskel")


@dataclass(frozen=True)
class CoxResult:
    skeleton: SphericalSkeleton
    provenance: dict[str, str] = field(hash=False)

    def preimage(self, name: str) -> str:
        return self.provenance[name]

    def doubled(self) -> dict[str, tuple[str, ...]]:
        """Source colors that were split, with the names of their two copies."""

        groups: dict[str, list[str]] = {}
        for new, source in self.provenance.items():
            groups.setdefault(source, []).append(new)
        return {source: tuple(news) for source, news in groups.items() if len(news) > 1}


@dataclass(frozen=True, slots=True)
class ClassGroup:
    """Cl(Spec R(X)) ≅ Z^𝒮, freely generated by the classes of the colors in 𝒟^𝒮."""

    rank: int
    generators: tuple[str, ...]

    @property
    def source_class_group_free(self) -> bool | None:
        """False when Cl(X) is known not to be free; None when the skeleton cannot tell."""

        return False if self.rank else None


def halve_columns(values: Vec, columns: set[int]) -> Vec:
    """Halve the values on the spherical roots with index in columns."""

    return tuple(v / 2 if k in columns else v for k, v in enumerate(values))


def halve_roots(sigma_sc: tuple[Vec, ...], columns: set[int]) -> tuple[Vec, ...]:
    """Replace 2α by α for the spherical roots with index in columns."""

    return tuple(scale(Fraction(1, 2), sigma) if k in columns else sigma for k, sigma in enumerate(sigma_sc))


def cox_transform(sk: SphericalSkeleton) -> CoxResult:
    """Split every color of 𝒟^𝒮 in two and renormalize 2α ↦ α for α ∈ 𝒮."""

    sets = derived_sets(sk)
    columns = {sets.column(label) for label in sets.script_S}
    sigma_sc = halve_roots(sk.sigma_sc, columns)

    taken = {d.name for d in sk.divisors if d.name not in sets.d_script_S}
    divisors: list[Divisor] = []
    provenance: dict[str, str] = {}
    for d in sk.divisors:
        c = halve_columns(d.c, columns)
        if d.name not in sets.d_script_S:
            divisors.append(Divisor(d.name, d.varsigma, c, d.m))
            provenance[d.name] = d.name
            continue
        first = d.name + "'"
        while first in taken:
            first += "'"
        second = first + "'"
        while second in taken:
            second += "'"
        taken.update((first, second))
        for name in (first, second):
            divisors.append(Divisor(name, d.varsigma, c, d.m))
            provenance[name] = d.name

    result = SphericalSkeleton(sk.rs, sigma_sc, tuple(divisors), sk.name)
    violations = validate(result)
    if violations:
        raise CertificateError(f"transformed skeleton is invalid: {'; '.join(map(str, violations))}")
    if derived_sets(result).script_S:
        raise CertificateError("transformed skeleton is not factorial")
    if sets.script_S:
        logger.debug("Split colors %s of %s", sorted(sets.d_script_S), sk.name or "skeleton")
    return CoxResult(result, provenance)


def class_group(sk: SphericalSkeleton) -> ClassGroup:
    sets = derived_sets(sk)
    generators = tuple(sets.color(label) for label in sorted(sets.script_S))
    return ClassGroup(rank=len(generators), generators=generators)
