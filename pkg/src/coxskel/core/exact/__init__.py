"""Exact rational arithmetic, linear algebra, cones and linear programming."""

from __future__ import annotations

from .cones import cone_is_full
from .linalg import (
    Mat,
    Vec,
    add,
    dot,
    is_linearly_independent,
    mat_vec,
    neg,
    nullspace,
    primitive,
    rank,
    rref,
    scale,
    to_vec,
    transpose,
    unit,
    zeros,
)
from .oracle import brute_force_lp
from .polyhedron import Constraint, Polyhedron
from .simplex import Infeasible, LpOutcome, LpSolver, Optimal, Unbounded, solve_lp

__all__ = [
    "Constraint",
    "Infeasible",
    "LpOutcome",
    "LpSolver",
    "Mat",
    "Optimal",
    "Polyhedron",
    "Unbounded",
    "Vec",
    "add",
    "brute_force_lp",
    "cone_is_full",
    "dot",
    "is_linearly_independent",
    "mat_vec",
    "neg",
    "nullspace",
    "primitive",
    "rank",
    "rref",
    "scale",
    "solve_lp",
    "to_vec",
    "transpose",
    "unit",
    "zeros",
]
