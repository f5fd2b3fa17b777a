from fractions import Fraction

import pytest

from coxskel.core.cox import cox_transform
from coxskel.core.errors import CertificateError, NotFactorial
from coxskel.core.exact import LpSolver, Optimal
from coxskel.core.iota import (
    INFINITY,
    IotaReport,
    Verdict,
    base_term,
    check_conjecture,
    classify,
    format_value,
    iota,
    iota_affine,
    iota_objective,
)
from coxskel.core.skeleton import Divisor, SphericalSkeleton
from tests.utils.skeletons import A1, FIXTURES, fix_f1, fix_p1, fix_p2, fix_s2

GOLDEN = {
    "FIX-PT": (Fraction(0), 0, Verdict.HOLDS_WITH_EQUALITY),
    "FIX-P1": (Fraction(1), 1, Verdict.HOLDS_WITH_EQUALITY),
    "FIX-P2": (Fraction(1), 1, Verdict.HOLDS_WITH_EQUALITY),
    "FIX-S2": (INFINITY, 1, Verdict.NOT_COMPLETE),
    "FIX-F1": (Fraction(1), 2, Verdict.HOLDS_STRICT),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_values(name: str) -> None:
    value, dim, verdict = GOLDEN[name]

    outcome = check_conjecture(FIXTURES[name]())

    assert outcome.iota.value == value
    assert outcome.dim_gp == dim
    assert outcome.verdict is verdict


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_cross_checked_solver_agrees(name: str) -> None:
    plain = iota(FIXTURES[name]())
    checked = iota(FIXTURES[name](), solver=LpSolver(cross_check=True))

    assert checked.value == plain.value


def test_p2_witness_and_terms() -> None:
    report = iota(fix_p2())

    assert report.witness == (1,)
    assert report.base_term == 0
    assert iota_objective(fix_p2()) == (1,)


def test_p1_value_comes_from_multiplicity() -> None:
    assert base_term(fix_p1()) == 1
    assert iota(fix_p1()).value == 1


def test_f1_witness() -> None:
    report = iota(fix_f1())

    assert report.witness == (0, 1)
    assert report.is_finite


def test_s2_is_unbounded_with_a_ray() -> None:
    report = iota(fix_s2())

    assert not report.is_finite
    assert report.ray == (1,)
    assert report.to_dict() == {"value": "inf", "base_term": "0", "ray": ["1"]}


def test_large_multiplicity_violates_the_bound() -> None:
    sk = SphericalSkeleton.of(A1, [], [Divisor.of("D", ["c1.1"], [], m=3)])

    outcome = check_conjecture(sk)

    assert outcome.iota.value == 2
    assert outcome.verdict is Verdict.VIOLATION
    assert outcome.to_dict()["verdict"] == "Violation"


def test_lower_bound_is_enforced(mocker) -> None:
    mocker.patch(
        "coxskel.core.iota.invariant.solve_lp",
        return_value=Optimal(value=Fraction(-3), witness=(Fraction(0),)),
    )

    with pytest.raises(CertificateError):
        iota(fix_p2())


@pytest.mark.parametrize(("name", "expected"), [("FIX-PT", 0), ("FIX-P1", 1), ("FIX-P2", 1)])
def test_iota_affine_agrees_on_factorial_fixtures(name: str, expected: int) -> None:
    report = iota_affine(FIXTURES[name]())

    assert report.value == expected


def test_iota_affine_reports_the_weight_witness() -> None:
    report = iota_affine(fix_p2())

    assert report.witness == (1,)
    assert report.ambient_witness == (3, 0)


def test_iota_affine_on_cox_output_matches_iota() -> None:
    lifted = cox_transform(fix_f1()).skeleton

    assert iota_affine(lifted).value == iota(lifted).value == 1


def test_iota_affine_rejects_non_factorial() -> None:
    with pytest.raises(NotFactorial):
        iota_affine(fix_s2())


def test_classify() -> None:
    finite = IotaReport(value=Fraction(2), base_term=Fraction(0))

    assert classify(finite, 3, True) is Verdict.HOLDS_STRICT
    assert classify(finite, 2, True) is Verdict.HOLDS_WITH_EQUALITY
    assert classify(finite, 1, True) is Verdict.VIOLATION
    assert classify(finite, 1, False) is Verdict.NOT_COMPLETE


def test_classify_rejects_infinite_value_on_complete_skeleton() -> None:
    with pytest.raises(CertificateError):
        classify(IotaReport(value=INFINITY, base_term=Fraction(0)), 1, True)


def test_format_value() -> None:
    assert format_value(INFINITY) == "inf"
    assert format_value(Fraction(3, 2)) == "3/2"
