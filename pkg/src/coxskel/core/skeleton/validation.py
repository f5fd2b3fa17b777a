"""Validation rules for spherical skeletons.

V1  Σ^sc is a linearly independent family of nonzero, nonnegative
    combinations of simple roots.
V2  every value ⟨𝔠(D), σ⟩ is an integer.
V3  divisors with empty ς are G-invariant, so their values are ≤ 0.
V4  a root 2α ∈ Σ^sc has exactly one color moved by α, and that color has
    ς = {α}; a root α ∈ Σ^sc has exactly two colors moved by α.
V5  multiplicities are positive integers.
V6  a simple-root multiple in Σ^sc is α or 2α, and α is stored undoubled
    only when two colors are moved by it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from coxskel.core.errors import InvalidSkeleton
from coxskel.core.exact import is_linearly_independent

from .models import SphericalSkeleton, simple_root_multiple


@dataclass(frozen=True, slots=True)
class Violation:
    rule: str
    message: str
    divisor: str | None = None
    root: str | None = None

    def __str__(self) -> str:
        refs = [ref for ref in (self.divisor, self.root) if ref]
        where = f" [{', '.join(refs)}]" if refs else ""
        return f"{self.rule}{where}: {self.message}"

    def to_dict(self) -> dict[str, str]:
        payload = {"rule": self.rule, "message": self.message}
        if self.divisor:
            payload["divisor"] = self.divisor
        if self.root:
            payload["root"] = self.root
        return payload


def _check_roots(sk: SphericalSkeleton) -> list[Violation]:
    found: list[Violation] = []
    for index, sigma in enumerate(sk.sigma_sc, start=1):
        if not any(sigma):
            found.append(Violation("V1", f"spherical root {index} is zero"))
        elif any(a < 0 for a in sigma):
            found.append(Violation("V1", f"spherical root {index} has a negative simple-root coefficient"))
    if sk.sigma_sc and not is_linearly_independent(sk.sigma_sc):
        found.append(Violation("V1", "spherical roots are linearly dependent"))
    return found


def _check_values(sk: SphericalSkeleton) -> list[Violation]:
    found: list[Violation] = []
    for d in sk.divisors:
        for index, value in enumerate(d.c, start=1):
            if value.denominator != 1:
                found.append(Violation("V2", f"value {value} on spherical root {index} is not integral", d.name))
    for d in sk.g_invariant:
        if any(value > 0 for value in d.c):
            found.append(Violation("V3", "G-invariant divisor pairs positively with a spherical root", d.name))
    return found


def _check_types(sk: SphericalSkeleton) -> list[Violation]:
    found: list[Violation] = []
    for sigma in sk.sigma_sc:
        multiple = simple_root_multiple(sigma)
        if multiple is None:
            continue
        node, k = multiple
        label = sk.rs.labels[node]
        moving = sk.colors_moved_by(label)
        if k == 2:
            if len(moving) != 1:
                found.append(
                    Violation("V4", f"2{label} needs one color moved by {label}, found {len(moving)}", None, label)
                )
            elif moving[0].varsigma != frozenset({label}):
                found.append(
                    Violation("V4", f"the color of 2{label} must be moved by {label} alone", moving[0].name, label)
                )
        elif k == 1:
            if len(moving) != 2:
                found.append(
                    Violation("V4", f"{label} needs two colors moved by {label}, found {len(moving)}", None, label)
                )
            if len(moving) == 1:
                found.append(
                    Violation("V6", f"{label} has a single color and must be stored as 2{label}", root=label)
                )
        else:
            found.append(Violation("V6", f"{k}·{label} is neither {label} nor 2{label}", root=label))
    return found


def _check_multiplicities(sk: SphericalSkeleton, strict: bool) -> list[Violation]:
    found: list[Violation] = []
    for d in sk.divisors:
        if isinstance(d.m, bool) or not isinstance(d.m, int) or d.m < 1:
            found.append(Violation("V5", f"multiplicity {d.m!r} is not a positive integer", d.name))
        elif strict and not d.varsigma and d.m != 1:
            found.append(Violation("V5", f"G-invariant divisor has multiplicity {d.m}, expected 1", d.name))
    return found


@lru_cache(maxsize=512)
def _validate(sk: SphericalSkeleton, strict: bool) -> tuple[Violation, ...]:
    violations = _check_roots(sk) + _check_values(sk) + _check_types(sk) + _check_multiplicities(sk, strict)
    return tuple(violations)


def validate(sk: SphericalSkeleton, *, strict: bool = False) -> list[Violation]:
    """All violated rules; empty when the skeleton is valid."""

    return list(_validate(sk, strict))


def ensure_valid(sk: SphericalSkeleton, *, strict: bool = False) -> None:
    violations = validate(sk, strict=strict)
    if violations:
        raise InvalidSkeleton(violations)
