from fractions import Fraction

import pytest

from coxskel.core.cox import class_group, cox_ambient, cox_transform, has_fixed_point
from coxskel.core.errors import CertificateError, DimensionMismatch, InvalidSkeleton
from coxskel.core.exact import LpSolver
from coxskel.core.skeleton import Divisor, SphericalSkeleton, Violation, derived_sets, is_factorial
from tests.utils.skeletons import (
    A1,
    FIXTURES,
    a2_doubled_second_root,
    a2_mixed_roots,
    f1_roots_reversed,
    fix_f1,
    fix_p2,
    fix_pt,
    fix_s2,
)


def test_cox_of_s2_splits_the_color() -> None:
    result = cox_transform(fix_s2())

    assert result.skeleton.sigma_sc == ((Fraction(1),),)
    assert result.skeleton.names == ("D'", "D''")
    assert all(d.c == (Fraction(1),) for d in result.skeleton.divisors)
    assert result.provenance == {"D'": "D", "D''": "D"}
    assert result.doubled() == {"D": ("D'", "D''")}
    assert result.preimage("D''") == "D"


def test_cox_of_f1_halves_only_the_non_factorial_column() -> None:
    result = cox_transform(fix_f1())
    sk = result.skeleton

    assert sk.sigma_sc == ((1, 0), (0, 1))
    assert sk.names == ("D1'", "D1''", "D2", "D3", "E")
    assert [d.c for d in sk.divisors] == [(1, 0), (1, 0), (0, 1), (0, 1), (-1, -1)]
    assert derived_sets(sk).sigma_a == frozenset({"c1.1", "c2.1"})
    assert is_factorial(sk)


def test_doubled_root_on_a_later_simple_root_is_halved_whole() -> None:
    result = cox_transform(a2_doubled_second_root())
    sk = result.skeleton

    assert sk.sigma_sc == ((0, 1),)
    assert sk.names == ("D'", "D''")
    assert all(d.c == (1,) for d in sk.divisors)
    assert derived_sets(sk).sigma_a == frozenset({"c1.2"})


def test_halving_leaves_the_other_spherical_roots_alone() -> None:
    result = cox_transform(a2_mixed_roots())
    sk = result.skeleton

    assert sk.sigma_sc == ((1, 1), (0, 1))
    assert sk.names == ("C", "D'", "D''", "E")
    assert [d.c for d in sk.divisors] == [(1, 0), (0, 1), (0, 1), (-1, -1)]
    assert is_factorial(sk)


def test_doubled_root_at_a_later_index_is_halved() -> None:
    sk = cox_transform(f1_roots_reversed()).skeleton

    assert sk.sigma_sc == ((0, 1), (1, 0))
    assert sk.names == ("D1'", "D1''", "D2", "D3", "E")
    assert [d.c for d in sk.divisors] == [(0, 1), (0, 1), (1, 0), (1, 0), (-1, -1)]


def test_factorial_input_is_returned_unchanged() -> None:
    result = cox_transform(fix_p2())

    assert result.skeleton == fix_p2()
    assert result.provenance == {"D": "D", "E": "E"}
    assert result.doubled() == {}


def test_cox_is_idempotent_after_one_step() -> None:
    once = cox_transform(fix_f1()).skeleton

    assert cox_transform(once).skeleton == once


def test_split_names_avoid_existing_divisors() -> None:
    sk = SphericalSkeleton.of(A1, [[2]], [Divisor.of("D", ["c1.1"], [2]), Divisor.of("D'", [], [-2])])

    result = cox_transform(sk)

    assert result.skeleton.names == ("D''", "D'''", "D'")
    assert result.provenance["D'"] == "D'"
    assert result.doubled() == {"D": ("D''", "D'''")}


def test_invalid_input_is_rejected() -> None:
    with pytest.raises(InvalidSkeleton):
        cox_transform(SphericalSkeleton.of(A1, [[3]], [Divisor.of("D", ["c1.1"], [1])]))


def test_invalid_output_is_reported_as_certificate_error(mocker) -> None:
    mocker.patch(
        "coxskel.core.cox.transform.validate",
        return_value=[Violation("V4", "forged")],
    )

    with pytest.raises(CertificateError):
        cox_transform(fix_s2())


@pytest.mark.parametrize(
    ("name", "rank", "generators", "free"),
    [
        ("FIX-PT", 0, (), None),
        ("FIX-P1", 0, (), None),
        ("FIX-P2", 0, (), None),
        ("FIX-S2", 1, ("D",), False),
        ("FIX-F1", 1, ("D1",), False),
    ],
)
def test_class_group(name: str, rank: int, generators: tuple[str, ...], free: bool | None) -> None:
    group = class_group(FIXTURES[name]())

    assert group.rank == rank
    assert group.generators == generators
    assert group.source_class_group_free is free


def test_class_group_of_cox_output_is_trivial() -> None:
    assert class_group(cox_transform(fix_f1()).skeleton).rank == 0


def test_cox_ambient_of_p2() -> None:
    ambient = cox_ambient(fix_p2())

    assert ambient.basis_index == ("D", "E")
    assert ambient.pullback((Fraction(1),)) == (2, -1)
    assert ambient.push_forward((Fraction(1), Fraction(0))) == (2,)
    assert ambient.coordinate("E") == 1


def test_cox_ambient_checks_lengths() -> None:
    ambient = cox_ambient(fix_p2())

    with pytest.raises(DimensionMismatch):
        ambient.pullback((Fraction(1), Fraction(1)))
    with pytest.raises(DimensionMismatch):
        ambient.push_forward((Fraction(1),))


def test_cox_ambient_of_point_is_empty() -> None:
    ambient = cox_ambient(fix_pt())

    assert ambient.basis_index == ()
    assert ambient.pullback(()) == ()


@pytest.mark.parametrize(
    ("name", "expected"),
    [("FIX-PT", True), ("FIX-P1", True), ("FIX-P2", True), ("FIX-S2", False), ("FIX-F1", True)],
)
def test_fixed_point(name: str, expected: bool) -> None:
    sk = FIXTURES[name]()

    assert has_fixed_point(sk) is expected
    assert has_fixed_point(sk, solver=LpSolver(cross_check=True)) is expected
