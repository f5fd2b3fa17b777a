import random
import unittest
from fractions import Fraction

import pytest

from coxskel.core.errors import CertificateError, DimensionMismatch
from coxskel.core.exact import (
    Infeasible,
    LpSolver,
    Optimal,
    Polyhedron,
    Unbounded,
    brute_force_lp,
    cone_is_full,
    is_linearly_independent,
    nullspace,
    primitive,
    rank,
    rref,
    solve_lp,
    to_vec,
)
from coxskel.core.exact.linalg import solve_unique
from coxskel.core.exact.oracle import extreme_rays, vertices

F = Fraction


class LinearAlgebraTestCase(unittest.TestCase):
    def test_rank_of_dependent_rows(self) -> None:
        rows = [to_vec([1, 2, 3]), to_vec([2, 4, 6]), to_vec([0, 1, 1])]
        self.assertEqual(rank(rows), 2)
        self.assertFalse(is_linearly_independent(rows))

    def test_rank_with_fractions(self) -> None:
        rows = [to_vec(["1/2", "1/3"]), to_vec(["3/2", 1])]
        self.assertEqual(rank(rows), 1)

    def test_empty_family_is_independent(self) -> None:
        self.assertTrue(is_linearly_independent([]))
        self.assertEqual(rank([]), 0)

    def test_rref_and_nullspace(self) -> None:
        rows = [to_vec([1, 1, 0]), to_vec([0, 1, 1])]
        reduced, pivots = rref(rows, 3)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced[0], [F(1), F(0), F(-1)])
        basis = nullspace(rows, 3)
        self.assertEqual(basis, [(F(1), F(-1), F(1))])

    def test_rref_entries_are_fractions(self) -> None:
        reduced, pivots = rref([to_vec(["1/2", 1]), to_vec([1, 3])], 2)
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced, [[F(1), F(0)], [F(0), F(1)]])
        self.assertTrue(all(isinstance(a, Fraction) for row in reduced for a in row))

    def test_nullspace_of_a_fractional_row(self) -> None:
        basis = nullspace([to_vec(["1/3", "2/3"])], 2)
        self.assertEqual(basis, [(F(-2), F(1))])
        self.assertIsInstance(basis[0][0], Fraction)

    def test_nullspace_without_rows_is_everything(self) -> None:
        self.assertEqual(len(nullspace([], 2)), 2)

    def test_solve_unique(self) -> None:
        rows = [to_vec([1, 1]), to_vec([1, -1])]
        self.assertEqual(solve_unique(rows, [F(2), F(0)], 2), (F(1), F(1)))
        self.assertIsNone(solve_unique([to_vec([1, 1])], [F(1)], 2))

    def test_primitive_clears_denominators(self) -> None:
        self.assertEqual(primitive(to_vec(["1/2", "3/4"])), (F(2), F(3)))
        self.assertEqual(primitive(to_vec([0, -4, 6])), (F(0), F(-2), F(3)))

    def test_width_mismatch_raises(self) -> None:
        with self.assertRaises(DimensionMismatch):
            rank([to_vec([1, 2]), to_vec([1])])


class SimplexTestCase(unittest.TestCase):
    def test_interval_optimum(self) -> None:
        p = Polyhedron.from_rows(1, [([1], 0), ([-1], -1)])
        outcome = solve_lp(p, to_vec([1]))
        self.assertEqual(outcome, Optimal(F(1), (F(1),)))

    def test_polygon_optimum(self) -> None:
        # x ≥ 0, y ≥ 0, x + y ≤ 1, maximize y
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0), ([-1, -1], -1)])
        outcome = solve_lp(p, to_vec([0, 1]))
        self.assertIsInstance(outcome, Optimal)
        assert isinstance(outcome, Optimal)
        self.assertEqual(outcome.value, 1)
        self.assertEqual(outcome.witness, (F(0), F(1)))

    def test_unbounded_ray_is_primitive(self) -> None:
        p = Polyhedron.from_rows(1, [([2], -1), ([1], 0)])
        outcome = solve_lp(p, to_vec([2]))
        self.assertIsInstance(outcome, Unbounded)
        assert isinstance(outcome, Unbounded)
        self.assertEqual(outcome.ray, (F(1),))
        self.assertTrue(p.contains(outcome.base))
        self.assertFalse(outcome.along_secondary)

    def test_infeasible(self) -> None:
        p = Polyhedron.from_rows(1, [([1], 1), ([-1], 0)])
        self.assertIsInstance(solve_lp(p, to_vec([1])), Infeasible)

    def test_free_variables(self) -> None:
        # x unconstrained below: x ≤ 3, maximize x
        p = Polyhedron.from_rows(1, [([-1], -3)])
        self.assertEqual(solve_lp(p, to_vec([1])), Optimal(F(3), (F(3),)))

    def test_secondary_objective_breaks_ties(self) -> None:
        # x + y ≤ 1, x, y ≥ 0; maximize x + y, then x
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0), ([-1, -1], -1)])
        outcome = solve_lp(p, to_vec([1, 1]), to_vec([1, 0]))
        self.assertEqual(outcome, Optimal(F(1), (F(1), F(0))))
        outcome = solve_lp(p, to_vec([1, 1]), to_vec([0, 1]))
        self.assertEqual(outcome, Optimal(F(1), (F(0), F(1))))

    def test_secondary_unbounded_on_optimal_face(self) -> None:
        # maximize -x over x ≥ 0 (face x = 0), then y over y ≥ 0
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0)])
        outcome = solve_lp(p, to_vec([-1, 0]), to_vec([0, 1]))
        self.assertIsInstance(outcome, Unbounded)
        assert isinstance(outcome, Unbounded)
        self.assertEqual(outcome.ray, (F(0), F(1)))
        self.assertTrue(outcome.along_secondary)
        expected = brute_force_lp(p, to_vec([-1, 0]), to_vec([0, 1]))
        assert isinstance(expected, Unbounded)
        self.assertTrue(expected.along_secondary)
        self.assertEqual(expected.ray, outcome.ray)

    def test_zero_dimensional(self) -> None:
        p = Polyhedron.from_rows(0, [([], -2)])
        self.assertEqual(solve_lp(p, ()), Optimal(F(0), ()))

    def test_objective_length_checked(self) -> None:
        p = Polyhedron.from_rows(1, [([1], 0)])
        with self.assertRaises(DimensionMismatch):
            solve_lp(p, to_vec([1, 1]))

    def test_cross_check_mode_accepts_correct_answers(self) -> None:
        solver = LpSolver(cross_check=True)
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0), ([-1, -2], -4)])
        outcome = solver.solve(p, to_vec([1, 1]))
        self.assertEqual(outcome, Optimal(F(4), (F(4), F(0))))


def test_certificate_check_rejects_forged_outcome(mocker) -> None:
    p = Polyhedron.from_rows(1, [([1], 0), ([-1], -1)])
    mocker.patch.object(LpSolver, "_simplex", return_value=Optimal(F(2), (F(2),)))
    with pytest.raises(CertificateError):
        LpSolver().solve(p, to_vec([1]))


def test_oracle_mismatch_is_reported(mocker) -> None:
    p = Polyhedron.from_rows(1, [([1], 0), ([-1], -1)])
    mocker.patch("coxskel.core.exact.oracle._solve_single", return_value=Optimal(F(0), (F(0),)))
    with pytest.raises(CertificateError):
        LpSolver(cross_check=True).solve(p, to_vec([1]))


class OracleTestCase(unittest.TestCase):
    def test_vertices_and_rays_of_quadrant(self) -> None:
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0)])
        self.assertEqual(vertices(p), [(F(0), F(0))])
        self.assertCountEqual(extreme_rays(p), [(F(1), F(0)), (F(0), F(1))])

    def test_lineality_makes_objective_unbounded(self) -> None:
        p = Polyhedron.from_rows(2, [([1, 0], 0)])
        outcome = brute_force_lp(p, to_vec([0, 1]))
        self.assertIsInstance(outcome, Unbounded)

    def test_secondary_on_face(self) -> None:
        p = Polyhedron.from_rows(2, [([1, 0], 0), ([0, 1], 0), ([-1, -1], -1)])
        outcome = brute_force_lp(p, to_vec([1, 1]), to_vec([0, 1]))
        self.assertEqual(outcome, Optimal(F(1), (F(0), F(1))))


def _random_polyhedron(rng: random.Random) -> Polyhedron:
    dim = rng.randint(1, 3)
    rows = [([rng.randint(-3, 3) for _ in range(dim)], rng.randint(-4, 2)) for _ in range(rng.randint(1, 6))]
    return Polyhedron.from_rows(dim, rows)


def test_simplex_agrees_with_enumeration_on_random_programs() -> None:
    rng = random.Random(20240611)
    for _ in range(300):
        p = _random_polyhedron(rng)
        objective = to_vec([rng.randint(-2, 2) for _ in range(p.dim)])
        simplex = solve_lp(p, objective)
        oracle = brute_force_lp(p, objective)
        assert type(simplex) is type(oracle)
        if isinstance(simplex, Optimal) and isinstance(oracle, Optimal):
            assert simplex.value == oracle.value
            assert p.contains(simplex.witness)


class ConeTestCase(unittest.TestCase):
    def test_zero_dimensional_cone_is_full(self) -> None:
        self.assertTrue(cone_is_full([], 0))

    def test_line_is_full(self) -> None:
        self.assertTrue(cone_is_full([to_vec([2]), to_vec([-1])], 1))

    def test_half_line_is_not_full(self) -> None:
        self.assertFalse(cone_is_full([to_vec([2])], 1))

    def test_plane_cases(self) -> None:
        self.assertTrue(cone_is_full([to_vec(v) for v in ([2, 0], [0, 1], [0, 1], [-2, -1])], 2))
        self.assertFalse(cone_is_full([to_vec(v) for v in ([1, 0], [0, 1], [-1, 0])], 2))
        self.assertFalse(cone_is_full([to_vec(v) for v in ([1, 1], [-1, -1])], 2))
