"""Fixed-point criterion for the action on Spec R(X)."""

from __future__ import annotations

from fractions import Fraction

from coxskel.core.errors import CertificateError
from coxskel.core.exact import Constraint, Infeasible, LpSolver, Optimal, Polyhedron, solve_lp
from coxskel.core.skeleton import SphericalSkeleton, ensure_valid


def fixed_point_polyhedron(sk: SphericalSkeleton) -> Polyhedron:
    """Variables (u_D ..., ε): u_D ≥ ε, Σ u_D = 1 and Σ_D u_D⟨𝔠(D), σᵢ⟩ ≤ 0 for every i."""

    n = len(sk.divisors)
    width = n + 1
    rows: list[Constraint] = []
    for k in range(n):
        normal = [Fraction(0)] * width
        normal[k] = Fraction(1)
        normal[n] = Fraction(-1)
        rows.append(Constraint(tuple(normal), Fraction(0)))
    total = tuple([Fraction(1)] * n + [Fraction(0)])
    rows.append(Constraint(total, Fraction(1)))
    rows.append(Constraint(tuple(-a for a in total), Fraction(-1)))
    for i in range(sk.r):
        rows.append(Constraint(tuple([-d.c[i] for d in sk.divisors] + [Fraction(0)]), Fraction(0)))
    return Polyhedron(width, tuple(rows))


def has_fixed_point(sk: SphericalSkeleton, *, solver: LpSolver | None = None) -> bool:
    """True iff some strictly positive u has Σ_D u_D 𝔠(D) ≤ 0 on every spherical root."""

    ensure_valid(sk)
    if not sk.divisors:
        return True
    n = len(sk.divisors)
    objective = tuple([Fraction(0)] * n + [Fraction(1)])
    outcome = solve_lp(fixed_point_polyhedron(sk), objective, solver=solver)
    if isinstance(outcome, Infeasible):
        return False
    if not isinstance(outcome, Optimal):
        raise CertificateError("fixed-point LP cannot be unbounded")
    return outcome.value > 0
