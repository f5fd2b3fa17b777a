"""Factorialization of complete skeletons without decreasing ι."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Any

from coxskel.core.cox.transform import halve_columns, halve_roots
from coxskel.core.errors import AxiomViolation, CertificateError, NotComplete
from coxskel.core.exact import Constraint, LpSolver, Optimal, Polyhedron, Vec, add, dot, scale, solve_lp
from coxskel.core.iota import ConjectureVerdict, IotaReport, check_conjecture, iota
from coxskel.core.iota.invariant import iota_objective, iota_polyhedron
from coxskel.core.roots import dim_gp
from coxskel.core.skeleton import Divisor, SphericalSkeleton, derived_sets, is_complete, validate

logger = logging.getLogger("coxskel")


class StepCase(StrEnum):
    ADD_COLOR = "AddColor"
    ADD_INVARIANT_DIVISOR = "AddInvariantDivisor"


def _strs(values: Vec | None) -> list[str] | None:
    return None if values is None else [str(v) for v in values]


@dataclass(frozen=True, slots=True)
class FactorializeStep:
    alpha: str
    case: StepCase
    theta: Vec
    theta_prime: Vec
    added_divisor: Divisor
    lambda1: Fraction | None = None
    lambda2: Fraction | None = None

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "alpha": self.alpha,
            "case": str(self.case),
            "theta": _strs(self.theta),
            "theta_prime": _strs(self.theta_prime),
            "added_divisor": {
                "name": self.added_divisor.name,
                "varsigma": sorted(self.added_divisor.varsigma),
                "c": _strs(self.added_divisor.c),
                "m": self.added_divisor.m,
            },
        }
        if self.lambda1 is not None:
            payload["lambda1"] = str(self.lambda1)
        if self.lambda2 is not None:
            payload["lambda2"] = str(self.lambda2)
        return payload


@dataclass(frozen=True)
class FactorializeTrace:
    steps: tuple[FactorializeStep, ...]
    iota_before: IotaReport
    iota_after: IotaReport

    def to_dict(self) -> dict[str, Any]:
        return {
            "steps": [step.to_dict() for step in self.steps],
            "iota_before": self.iota_before.to_dict(),
            "iota_after": self.iota_after.to_dict(),
        }


@dataclass(frozen=True)
class ReductionReport:
    """ι(R) ≤ ι(R′) ≤ dim G/P for a complete skeleton R and its factorialization R′."""

    original: ConjectureVerdict
    factorial: ConjectureVerdict
    trace: FactorializeTrace = field(repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "original": self.original.to_dict(),
            "factorial": self.factorial.to_dict(),
            "steps": len(self.trace.steps),
        }


def _max_step(
    sk: SphericalSkeleton,
    theta: Vec,
    direction: Vec,
    solver: LpSolver | None,
) -> Fraction:
    """Largest λ ≥ 0 with θ + λ·direction still in Q* ∩ T."""

    rows = [Constraint((Fraction(1),), Fraction(0))]
    for i in range(sk.r):
        rows.append(Constraint((direction[i],), -theta[i]))
    for d in sk.divisors:
        rows.append(Constraint((dot(d.c, direction),), Fraction(-d.m) - dot(d.c, theta)))
    outcome = solve_lp(Polyhedron(1, tuple(rows)), (Fraction(1),), solver=solver)
    if not isinstance(outcome, Optimal):
        raise CertificateError(f"step length along {direction} is not a finite maximum")
    return outcome.witness[0]


def _check_statements(sk: SphericalSkeleton, color: Divisor, k: int) -> int:
    """Verify the structure around a 2α-color with negative pairing; return the index of γ."""

    negative = [i for i, value in enumerate(color.c) if value < 0]
    if len(negative) != 1:
        raise AxiomViolation("1", f"{color.name} pairs negatively with {len(negative)} spherical roots, expected one")
    g = negative[0]
    if color.c[g] != -1:
        raise AxiomViolation("2", f"{color.name} pairs with γ to {color.c[g]}, expected -1")

    starred = [d for d in sk.divisors if d.c[g] > 0 or d.name == color.name]
    names = {d.name for d in starred}
    rest = [d for d in sk.divisors if d.name not in names]
    total_k = sum((d.c[k] for d in starred), Fraction(0))
    if total_k != 0:
        raise AxiomViolation("3a", f"values on 2α over 𝒟* sum to {total_k}, expected 0")
    total_g = sum((d.c[g] for d in starred), Fraction(0))
    if total_g != 1:
        raise AxiomViolation("3b", f"values on γ over 𝒟* sum to {total_g}, expected 1")
    for d in rest:
        if d.c[k] > 0 or d.c[g] > 0:
            raise AxiomViolation("3c", f"{d.name} lies outside 𝒟* but pairs positively with 2α or γ")
    if not any(d.c[k] < 0 or d.c[g] < 0 for d in rest):
        raise AxiomViolation("4", "no divisor outside 𝒟* pairs strictly negatively with 2α or γ")
    return g


def _renormalize(sk: SphericalSkeleton, k: int, divisors: list[Divisor]) -> SphericalSkeleton:
    columns = {k}
    renormalized = [Divisor(d.name, d.varsigma, halve_columns(d.c, columns), d.m) for d in divisors]
    return sk.with_sigma(halve_roots(sk.sigma_sc, columns), renormalized)


def _step(
    sk: SphericalSkeleton,
    alpha: str,
    invariant_m: int,
    solver: LpSolver | None,
) -> tuple[SphericalSkeleton, FactorializeStep]:
    sets = derived_sets(sk)
    k = sets.column(alpha)
    color = sk.divisor(sets.color(alpha))
    objective = iota_objective(sk)

    outcome = solve_lp(iota_polyhedron(sk), objective, color.c, solver=solver)
    if not isinstance(outcome, Optimal):
        raise CertificateError("ι of a complete skeleton must be attained")
    theta = outcome.witness
    theta_prime = theta
    lambda1: Fraction | None = None
    lambda2: Fraction | None = None

    if dot(color.c, theta) < 0:
        g = _check_statements(sk, color, k)
        v1 = tuple(Fraction(-1) if i == k else Fraction(0) for i in range(sk.r))
        v2 = add(v1, tuple(Fraction(-2) if i == g else Fraction(0) for i in range(sk.r)))
        for v in (v1, v2):
            if dot(objective, v) < 0:
                raise AxiomViolation("4", f"moving along {v} decreases the objective")
        lambda1 = _max_step(sk, theta, v1, solver)
        theta1 = add(theta, scale(lambda1, v1))
        lambda2 = _max_step(sk, theta1, v2, solver)
        theta_prime = add(theta1, scale(lambda2, v2))
        if dot(objective, theta_prime) != outcome.value:
            raise AxiomViolation("4", "the adjusted point left the optimal set")

    if dot(color.c, theta_prime) >= 0:
        added = Divisor(sk.fresh_name(color.name), color.varsigma, color.c, color.m)
        result = _renormalize(sk, k, list(sk.divisors) + [added])
        case = StepCase.ADD_COLOR
    else:
        if theta_prime[k] != 0:
            raise AxiomViolation("α*", f"adjusted point has coefficient {theta_prime[k]} on 2{alpha}, expected 0")
        c = tuple(Fraction(-1) if i == k else Fraction(0) for i in range(sk.r))
        added = Divisor(sk.fresh_name(color.name, ".inv"), frozenset(), c, invariant_m)
        result = sk.with_divisors(list(sk.divisors) + [added])
        case = StepCase.ADD_INVARIANT_DIVISOR

    logger.debug("Factorialize %s at %s: %s via %s", sk.name or "skeleton", alpha, case, added.name)
    step = FactorializeStep(alpha, case, theta, theta_prime, added, lambda1, lambda2)
    return result, step


def factorialize(
    sk: SphericalSkeleton,
    *,
    invariant_m: int = 1,
    solver: LpSolver | None = None,
) -> tuple[SphericalSkeleton, FactorializeTrace]:
    """Remove every root of 𝒮 by adding a color copy or a G-invariant divisor.

    Structural statements the construction depends on are re-verified on
    each step and raise AxiomViolation when the input does not satisfy them.
    """

    if not is_complete(sk, solver=solver):
        raise NotComplete(f"{sk.name or 'skeleton'} is not complete")
    before = iota(sk, solver=solver)
    moved = dim_gp(sk.rs, sk.moved_roots)

    current = sk
    steps: list[FactorializeStep] = []
    remaining = derived_sets(sk).script_S
    while remaining:
        alpha = min(remaining)
        current, step = _step(current, alpha, invariant_m, solver)
        steps.append(step)
        violations = validate(current)
        if violations:
            raise CertificateError(f"step at {alpha} produced an invalid skeleton: {violations[0]}")
        following = derived_sets(current).script_S
        if following != remaining - {alpha}:
            raise CertificateError(f"step at {alpha} did not remove exactly {alpha} from 𝒮")
        remaining = following

    after = iota(current, solver=solver)
    if not is_complete(current, solver=solver):
        raise CertificateError("factorialized skeleton is not complete")
    if dim_gp(current.rs, current.moved_roots) != moved:
        raise CertificateError("factorialization changed dim G/P")
    if after.value < before.value:
        raise CertificateError(f"ι decreased from {before.value} to {after.value}")
    return current, FactorializeTrace(tuple(steps), before, after)


def reduce_conjecture(
    sk: SphericalSkeleton,
    *,
    invariant_m: int = 1,
    solver: LpSolver | None = None,
) -> ReductionReport:
    """Check the bound on sk and on its factorialization."""

    factorial, trace = factorialize(sk, invariant_m=invariant_m, solver=solver)
    return ReductionReport(
        original=check_conjecture(sk, solver=solver),
        factorial=check_conjecture(factorial, solver=solver),
        trace=trace,
    )
