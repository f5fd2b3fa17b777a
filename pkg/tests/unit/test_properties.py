"""Randomized checks of the structural statements over generated skeletons."""

import random
from collections import Counter

import pytest

from coxskel.core.cox import class_group, cox_transform, has_fixed_point
from coxskel.core.exact import LpSolver
from coxskel.core.factorial import StepCase, factorialize
from coxskel.core.iota import iota, iota_affine
from coxskel.core.iso import are_isomorphic, verify_isomorphism
from coxskel.core.roots import dim_gp
from coxskel.core.skeleton import SphericalSkeleton, derived_sets, is_complete, is_factorial, validate
from tests.strategies import relabeled_copy, skeletons
from tests.utils.skeletons import FIXTURES, add_invariant_instance

pytestmark = pytest.mark.slow

SEED = 7
COUNT = 200
SOLVER = LpSolver(cross_check=True)


@pytest.fixture(scope="module")
def instances() -> list[SphericalSkeleton]:
    return skeletons(SEED, COUNT)


def test_generator_builds_valid_skeletons(instances: list[SphericalSkeleton]) -> None:
    assert len(instances) >= 200
    for sk in instances:
        assert validate(sk) == [], sk.name


def test_cox_is_idempotent_up_to_isomorphism(instances: list[SphericalSkeleton]) -> None:
    for sk in instances:
        once = cox_transform(sk).skeleton
        twice = cox_transform(once).skeleton
        assert are_isomorphic(twice, once) is not None, sk.name


def test_factorial_iff_cox_is_identity(instances: list[SphericalSkeleton]) -> None:
    for sk in instances:
        unchanged = are_isomorphic(sk, cox_transform(sk).skeleton) is not None
        assert is_factorial(sk) == unchanged, sk.name


def test_cox_preserves_completeness(instances: list[SphericalSkeleton]) -> None:
    for sk in instances:
        assert is_complete(sk, solver=SOLVER) == is_complete(cox_transform(sk).skeleton, solver=SOLVER), sk.name


def test_fixed_point_iff_complete(instances: list[SphericalSkeleton]) -> None:
    for sk in [*instances, *(build() for build in FIXTURES.values())]:
        assert has_fixed_point(sk, solver=SOLVER) == is_complete(sk, solver=SOLVER), sk.name


def test_class_group_rank(instances: list[SphericalSkeleton]) -> None:
    for sk in instances:
        assert class_group(sk).rank == len(derived_sets(sk).script_S), sk.name
        assert class_group(cox_transform(sk).skeleton).rank == 0, sk.name


def test_iota_lower_bound_and_finiteness(instances: list[SphericalSkeleton]) -> None:
    for sk in instances:
        report = iota(sk, solver=SOLVER)
        assert report.value >= report.base_term >= 0, sk.name
        if is_complete(sk):
            assert report.is_finite, sk.name


def test_iota_affine_matches_iota_on_factorial_instances(instances: list[SphericalSkeleton]) -> None:
    checked = 0
    for sk in instances:
        lifted = cox_transform(sk).skeleton
        assert iota_affine(lifted, solver=SOLVER).value == iota(lifted, solver=SOLVER).value, sk.name
        if is_factorial(sk):
            assert iota_affine(sk).value == iota(sk).value, sk.name
            checked += 1
    assert checked > 0


def test_invariants_survive_relabeling(instances: list[SphericalSkeleton]) -> None:
    rng = random.Random(SEED + 1)
    for sk in instances:
        copy = relabeled_copy(rng, sk)
        witness = are_isomorphic(sk, copy)
        assert witness is not None and verify_isomorphism(sk, copy, witness), sk.name
        assert len(copy.divisors) == len(sk.divisors)
        assert len(derived_sets(copy).script_S) == len(derived_sets(sk).script_S), sk.name
        assert is_complete(copy) == is_complete(sk), sk.name
        assert is_factorial(copy) == is_factorial(sk), sk.name
        assert has_fixed_point(copy) == has_fixed_point(sk), sk.name
        assert iota(copy).value == iota(sk).value, sk.name
        assert dim_gp(copy.rs, copy.moved_roots) == dim_gp(sk.rs, sk.moved_roots), sk.name


def test_factorialize_on_complete_instances(instances: list[SphericalSkeleton]) -> None:
    rng = random.Random(SEED + 2)
    candidates = [sk for sk in instances if is_complete(sk)]
    candidates.extend(build() for name, build in FIXTURES.items() if name != "FIX-S2")
    negative = add_invariant_instance()
    candidates.extend([negative, *(relabeled_copy(rng, negative) for _ in range(8))])

    cases: Counter[StepCase] = Counter()
    made_factorial = 0
    for sk in candidates:
        expected_steps = len(derived_sets(sk).script_S)
        result, trace = factorialize(sk, solver=SOLVER)
        assert is_factorial(result) and is_complete(result), sk.name
        assert validate(result) == [], sk.name
        assert trace.iota_after.value >= trace.iota_before.value, sk.name
        assert dim_gp(result.rs, result.moved_roots) == dim_gp(sk.rs, sk.moved_roots), sk.name
        assert len(trace.steps) == expected_steps, sk.name
        cases.update(step.case for step in trace.steps)
        if expected_steps:
            made_factorial += 1

    assert cases[StepCase.ADD_COLOR] > 0
    assert cases[StepCase.ADD_INVARIANT_DIVISOR] > 0
    assert made_factorial > 0


def test_generator_places_doubled_roots_off_their_node(instances: list[SphericalSkeleton]) -> None:
    displaced = 0
    for sk in instances:
        sets = derived_sets(sk)
        for label in sets.sigma_2a:
            if sets.column(label) != sk.rs.index(label):
                displaced += 1
    assert displaced > 0
