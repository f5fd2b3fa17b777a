"""Brute-force LP by vertex and extreme-ray enumeration, for small dimensions."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import replace
from fractions import Fraction
from itertools import combinations

from .linalg import Vec, dot, neg, nullspace, primitive, solve_unique, to_vec
from .polyhedron import Polyhedron
from .simplex import Infeasible, LpOutcome, Optimal, Unbounded


def vertices(p: Polyhedron) -> list[Vec]:
    """Vertices of a pointed polyhedron in enumeration order, without duplicates."""

    if p.dim == 0:
        return [()] if p.contains(()) else []
    found: list[Vec] = []
    for subset in combinations(p.rows, p.dim):
        point = solve_unique([c.normal for c in subset], [c.rhs for c in subset], p.dim)
        if point is not None and point not in found and p.contains(point):
            found.append(point)
    return found


def extreme_rays(p: Polyhedron) -> list[Vec]:
    """Primitive generators of the recession cone of a pointed polyhedron."""

    if p.dim == 0:
        return []
    found: list[Vec] = []
    for subset in combinations(p.rows, p.dim - 1):
        kernel = nullspace([c.normal for c in subset], p.dim)
        if len(kernel) != 1:
            continue
        for candidate in (kernel[0], neg(kernel[0])):
            ray = primitive(candidate)
            if ray not in found and p.recedes_along(ray):
                found.append(ray)
    return found


def _solve_single(p: Polyhedron, objective: Vec) -> LpOutcome:
    lineality = nullspace(p.normals, p.dim)
    pointed = p
    for direction in lineality:
        pointed = pointed.with_equation(direction, Fraction(0))

    points = vertices(pointed)
    if not points:
        return Infeasible()

    for direction in lineality:
        gain = dot(objective, direction)
        if gain != 0:
            ray = primitive(direction if gain > 0 else neg(direction))
            return Unbounded(ray=ray, base=points[0])

    for ray in extreme_rays(pointed):
        if dot(objective, ray) > 0:
            return Unbounded(ray=ray, base=points[0])

    best = max(points, key=lambda x: dot(objective, x))
    return Optimal(dot(objective, best), best)


def brute_force_lp(
    p: Polyhedron,
    objective: Sequence[Fraction],
    secondary: Sequence[Fraction] | None = None,
) -> LpOutcome:
    """Independent exact LP used to cross-check the simplex solver."""

    objective = to_vec(objective)
    primary = _solve_single(p, objective)
    if secondary is None or not isinstance(primary, Optimal):
        return primary
    face = p.with_equation(objective, primary.value) if any(objective) else p
    result = _solve_single(face, to_vec(secondary))
    if isinstance(result, Optimal):
        return Optimal(primary.value, result.witness)
    if isinstance(result, Unbounded):
        return replace(result, along_secondary=True)
    return result

