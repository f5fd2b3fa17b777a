"""Exact two-phase simplex method with Bland's rule and lexicographic objectives."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from coxskel.core.errors import CertificateError, DimensionMismatch

from .linalg import ZERO, Vec, dot, primitive, to_vec
from .polyhedron import Polyhedron

logger = logging.getLogger("coxskel")

ORACLE_MAX_DIM = 3


@dataclass(frozen=True, slots=True)
class Optimal:
    """Attained maximum of the primary objective and a point attaining it."""

    value: Fraction
    witness: Vec


@dataclass(frozen=True, slots=True)
class Unbounded:
    """Certificate of unboundedness: base is feasible and objective·ray > 0.

    With ``along_secondary`` the primary objective is bounded and attained:
    objective·ray = 0 and secondary·ray > 0 on the primary-optimal face.
    """

    ray: Vec
    base: Vec
    along_secondary: bool = False


@dataclass(frozen=True, slots=True)
class Infeasible:
    pass


LpOutcome = Optimal | Unbounded | Infeasible


class _Tableau:
    """Dense simplex tableau in equality form with an explicit basis."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int], width: int) -> None:
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.width = width
        self.pivots = 0

    def pivot(self, r: int, col: int) -> None:
        lead = self.rows[r][col]
        self.rows[r] = [a / lead for a in self.rows[r]]
        self.rhs[r] = self.rhs[r] / lead
        for i, row in enumerate(self.rows):
            factor = row[col]
            if i == r or factor == 0:
                continue
            pivot_row = self.rows[r]
            self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row, strict=True)]
            self.rhs[i] = self.rhs[i] - factor * self.rhs[r]
        self.basis[r] = col
        self.pivots += 1

    def drop_row(self, r: int) -> None:
        del self.rows[r]
        del self.rhs[r]
        del self.basis[r]

    def reduced_costs(self, cost: Sequence[Fraction]) -> list[Fraction]:
        reduced = list(cost)
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb == 0:
                continue
            for j in range(self.width):
                if row[j]:
                    reduced[j] -= cb * row[j]
        return reduced

    def objective_value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs, strict=True)), ZERO)

    def values(self) -> list[Fraction]:
        point = [ZERO] * self.width
        for b, v in zip(self.basis, self.rhs, strict=True):
            point[b] = v
        return point

    def maximize(self, cost: Sequence[Fraction], allowed: Sequence[int]) -> int | None:
        """Run Bland-rule pivots; return None at optimum, or the entering column of an unbounded edge."""

        while True:
            reduced = self.reduced_costs(cost)
            entering = next((j for j in allowed if reduced[j] > 0), None)
            if entering is None:
                return None
            leaving: int | None = None
            best: Fraction | None = None
            for i, row in enumerate(self.rows):
                if row[entering] <= 0:
                    continue
                ratio = self.rhs[i] / row[entering]
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and leaving is not None and self.basis[i] < self.basis[leaving])
                ):
                    best = ratio
                    leaving = i
            if leaving is None:
                return entering
            self.pivot(leaving, entering)

    def edge_direction(self, entering: int) -> list[Fraction]:
        direction = [ZERO] * self.width
        direction[entering] = Fraction(1)
        for i, row in enumerate(self.rows):
            direction[self.basis[i]] = -row[entering]
        return direction


class LpSolver:
    """Exact maximizer over halfspace-presented polyhedra.

    Free variables are split as x = x⁺ − x⁻ and every row gets a surplus
    column. Rows with positive right-hand side start on an artificial column
    that phase one drives out. With a secondary objective the solver
    re-optimizes over the primary-optimal face by forbidding every column
    whose primary reduced cost is negative.
    """

    def __init__(self, *, cross_check: bool = False) -> None:
        self.cross_check = cross_check

    def solve(
        self,
        p: Polyhedron,
        objective: Sequence[Fraction],
        secondary: Sequence[Fraction] | None = None,
    ) -> LpOutcome:
        objective = to_vec(objective)
        if len(objective) != p.dim:
            raise DimensionMismatch(f"objective of length {len(objective)} in dimension {p.dim}")
        if secondary is not None:
            secondary = to_vec(secondary)
            if len(secondary) != p.dim:
                raise DimensionMismatch(f"secondary objective of length {len(secondary)} in dimension {p.dim}")

        outcome = self._simplex(p, objective, secondary)
        self._verify(p, objective, secondary, outcome)
        if self.cross_check and p.dim <= ORACLE_MAX_DIM:
            self._compare_with_oracle(p, objective, secondary, outcome)
        return outcome

    def _simplex(self, p: Polyhedron, objective: Vec, secondary: Vec | None) -> LpOutcome:
        d = p.dim
        m = len(p.rows)
        structural = 2 * d + m
        needs_artificial = [row.rhs > 0 for row in p.rows]
        artificial_columns: dict[int, int] = {}
        for i, needed in enumerate(needs_artificial):
            if needed:
                artificial_columns[i] = structural + len(artificial_columns)
        width = structural + len(artificial_columns)

        rows: list[list[Fraction]] = []
        rhs: list[Fraction] = []
        basis: list[int] = []
        for i, constraint in enumerate(p.rows):
            # normal·x⁺ − normal·x⁻ − s_i = rhs, negated when rhs ≤ 0 so s_i can start basic
            sign = 1 if needs_artificial[i] else -1
            row = [ZERO] * width
            for j, a in enumerate(constraint.normal):
                row[j] = sign * a
                row[d + j] = -sign * a
            row[2 * d + i] = Fraction(-sign)
            if needs_artificial[i]:
                row[artificial_columns[i]] = Fraction(1)
                basis.append(artificial_columns[i])
            else:
                basis.append(2 * d + i)
            rows.append(row)
            rhs.append(sign * constraint.rhs)
        tableau = _Tableau(rows, rhs, basis, width)

        if artificial_columns:
            phase_one = [ZERO] * structural + [Fraction(-1)] * len(artificial_columns)
            tableau.maximize(phase_one, range(width))
            if tableau.objective_value(phase_one) < 0:
                logger.debug("LP infeasible after %d phase-one pivots", tableau.pivots)
                return Infeasible()
            self._drive_out_artificials(tableau, structural)

        allowed = list(range(structural))
        cost = [ZERO] * width
        for j, c in enumerate(objective):
            cost[j] = c
            cost[d + j] = -c
        entering = tableau.maximize(cost, allowed)
        if entering is not None:
            return self._unbounded(tableau, entering, d)

        if secondary is not None:
            reduced = tableau.reduced_costs(cost)
            face = [j for j in allowed if reduced[j] == 0]
            second = [ZERO] * width
            for j, c in enumerate(secondary):
                second[j] = c
                second[d + j] = -c
            entering = tableau.maximize(second, face)
            if entering is not None:
                return self._unbounded(tableau, entering, d, along_secondary=True)

        point = tableau.values()
        witness = tuple(point[j] - point[d + j] for j in range(d))
        logger.debug("LP optimal after %d pivots (dim %d, %d rows)", tableau.pivots, d, m)
        return Optimal(dot(objective, witness), witness)

    @staticmethod
    def _drive_out_artificials(tableau: _Tableau, structural: int) -> None:
        r = 0
        while r < len(tableau.rows):
            if tableau.basis[r] < structural:
                r += 1
                continue
            col = next((j for j in range(structural) if tableau.rows[r][j] != 0), None)
            if col is None:
                tableau.drop_row(r)
                continue
            tableau.pivot(r, col)
            r += 1

    @staticmethod
    def _unbounded(tableau: _Tableau, entering: int, d: int, *, along_secondary: bool = False) -> Unbounded:
        point = tableau.values()
        direction = tableau.edge_direction(entering)
        base = tuple(point[j] - point[d + j] for j in range(d))
        ray = primitive(tuple(direction[j] - direction[d + j] for j in range(d)))
        logger.debug("LP unbounded along %s", ray)
        return Unbounded(ray=ray, base=base, along_secondary=along_secondary)

    @staticmethod
    def _verify(p: Polyhedron, objective: Vec, secondary: Vec | None, outcome: LpOutcome) -> None:
        if isinstance(outcome, Optimal):
            if not p.contains(outcome.witness):
                raise CertificateError(f"optimal witness {outcome.witness} violates a constraint")
            if dot(objective, outcome.witness) != outcome.value:
                raise CertificateError("optimal witness does not attain the reported value")
        elif isinstance(outcome, Unbounded):
            if not p.contains(outcome.base):
                raise CertificateError(f"unbounded base point {outcome.base} is infeasible")
            if not p.recedes_along(outcome.ray):
                raise CertificateError(f"ray {outcome.ray} leaves the polyhedron")
            gain = dot(objective, outcome.ray)
            if outcome.along_secondary:
                improves = gain == 0 and secondary is not None and dot(secondary, outcome.ray) > 0
            else:
                improves = gain > 0
            if not improves:
                raise CertificateError(f"ray {outcome.ray} does not improve the objective")

    @staticmethod
    def _compare_with_oracle(p: Polyhedron, objective: Vec, secondary: Vec | None, outcome: LpOutcome) -> None:
        from .oracle import brute_force_lp

        expected = brute_force_lp(p, objective, secondary)
        if type(expected) is not type(outcome):
            raise CertificateError(
                f"simplex returned {type(outcome).__name__} but enumeration found {type(expected).__name__}"
            )
        if isinstance(outcome, Optimal) and isinstance(expected, Optimal):
            if outcome.value != expected.value:
                raise CertificateError(f"simplex optimum {outcome.value} differs from enumeration {expected.value}")
            if secondary is not None and dot(secondary, outcome.witness) != dot(secondary, expected.witness):
                raise CertificateError("secondary optimum differs from enumeration")
        if isinstance(outcome, Unbounded) and isinstance(expected, Unbounded):
            if outcome.along_secondary != expected.along_secondary:
                raise CertificateError("simplex and enumeration disagree on which objective is unbounded")


_DEFAULT_SOLVER = LpSolver()


def solve_lp(
    p: Polyhedron,
    objective: Sequence[Fraction],
    secondary: Sequence[Fraction] | None = None,
    *,
    solver: LpSolver | None = None,
) -> LpOutcome:
    """Maximize objective over p, lexicographically followed by secondary when given."""

    return (solver or _DEFAULT_SOLVER).solve(p, objective, secondary)
