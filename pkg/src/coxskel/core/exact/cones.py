"""Polyhedral cone predicates."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .linalg import ZERO, check_width, rank
from .polyhedron import Constraint, Polyhedron
from .simplex import Infeasible, LpSolver, solve_lp


def cone_is_full(
    generators: Sequence[Sequence[Fraction]],
    dim: int,
    *,
    solver: LpSolver | None = None,
) -> bool:
    """True iff the nonnegative hull of the generators is all of Q^dim.

    A cone is a linear subspace exactly when zero is a strictly positive
    combination of its generators, so fullness is decided by rank plus one
    feasibility LP over the coefficients λ_g ≥ 1 with Σ λ_g g = 0.
    """

    check_width(generators, dim)
    if dim == 0:
        return True
    if not generators or rank(generators) < dim:
        return False

    k = len(generators)
    rows: list[Constraint] = []
    for g in range(k):
        rows.append(Constraint(tuple(Fraction(int(j == g)) for j in range(k)), Fraction(1)))
    for i in range(dim):
        coordinate = tuple(Fraction(generators[g][i]) for g in range(k))
        rows.append(Constraint(coordinate, ZERO))
        rows.append(Constraint(tuple(-a for a in coordinate), ZERO))
    outcome = solve_lp(Polyhedron(k, tuple(rows)), (ZERO,) * k, solver=solver)
    return not isinstance(outcome, Infeasible)
