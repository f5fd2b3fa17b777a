from pathlib import Path

import pytest

from coxskel.core.cox import cox_transform
from coxskel.core.errors import ParseError, ValidationError
from coxskel.core.io import (
    Conventions,
    SkeletonDocument,
    decode_skeleton_document,
    document_to_dict,
    format_skeleton,
    format_skeleton_document,
    load_skeleton_document,
    parse_skeleton_file,
    read_skeleton_document,
)
from tests.utils.skeletons import CORPUS_DIR, FIXTURES, fix_f1, fix_s2

P2_TEXT = """\
name = "P2"
spherical_roots = [["2"]]

[[root_system]]
type = "A"
rank = 1

[[divisors]]
name = "D"
varsigma = ["c1.1"]
c = ["{d_value}"]
m = {d_m}

[[divisors]]
name = "E"
varsigma = []
c = ["-1"]
"""


def _p2(d_value: str = "2", d_m: int = 1, extra: str = "") -> str:
    return P2_TEXT.format(d_value=d_value, d_m=d_m) + extra


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_corpus_matches_in_code_fixtures(name: str) -> None:
    document = read_skeleton_document(CORPUS_DIR / f"{name}.skel")

    assert document.skeleton == FIXTURES[name]()
    assert document.skeleton.name == name
    assert document.conventions.is_default()
    assert document.provenance is None


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_formatting_is_canonical(name: str) -> None:
    text = format_skeleton(FIXTURES[name]())

    reparsed = parse_skeleton_file(text)
    assert reparsed == FIXTURES[name]()
    assert reparsed.name == name
    assert format_skeleton(reparsed) == text


def test_missing_keys_default() -> None:
    sk = parse_skeleton_file(_p2())

    assert sk.divisor("E").m == 1
    assert sk.divisor("E").varsigma == frozenset()


def test_name_falls_back_to_file_stem(tmp_path: Path) -> None:
    path = tmp_path / "unnamed.skel"
    path.write_text(_p2().replace('name = "P2"\n', ""), encoding="utf-8")

    assert read_skeleton_document(path).skeleton.name == "unnamed"


def test_unknown_key_reports_its_line() -> None:
    with pytest.raises(ParseError) as caught:
        parse_skeleton_file(_p2(extra="colour = 3\n"))

    assert caught.value.field == "colour"
    assert caught.value.line == 18


def test_bad_fraction() -> None:
    with pytest.raises(ParseError) as caught:
        parse_skeleton_file(_p2(d_value="two"))

    assert caught.value.field == "c"
    assert caught.value.line == 11


def test_zero_denominator_is_a_parse_error() -> None:
    with pytest.raises(ParseError):
        parse_skeleton_file(_p2(d_value="1/0"))


def test_toml_syntax_error_reports_a_line() -> None:
    with pytest.raises(ParseError) as caught:
        parse_skeleton_file('name = "x"\nspherical_roots = [\n[[root_system]\n')

    assert caught.value.line is not None


def test_wrong_number_of_values() -> None:
    with pytest.raises(ParseError) as caught:
        parse_skeleton_file(_p2().replace('c = ["-1"]', 'c = ["-1", "0"]'))

    assert caught.value.field == "c"


@pytest.mark.parametrize(
    ("replacement", "field"),
    [
        (('type = "A"', 'type = "H"'), "root_system"),
        (('varsigma = ["c1.1"]', 'varsigma = ["c2.1"]'), "varsigma"),
        (('name = "E"', 'name = "D"'), "name"),
        (("m = 1", "m = true"), "m"),
    ],
)
def test_structural_errors_name_their_field(replacement: tuple[str, str], field: str) -> None:
    with pytest.raises(ParseError) as caught:
        parse_skeleton_file(_p2().replace(*replacement))

    assert caught.value.field == field


def test_zero_multiplicity_fails_validation() -> None:
    with pytest.raises(ValidationError) as caught:
        parse_skeleton_file(_p2(d_m=0))

    assert [v.rule for v in caught.value.violations] == ["V5"]


def test_fractional_value_fails_validation() -> None:
    with pytest.raises(ValidationError) as caught:
        parse_skeleton_file(_p2(d_value="1/3"))

    assert [v.rule for v in caught.value.violations] == ["V2"]


def test_decode_skips_validation() -> None:
    document = decode_skeleton_document(_p2(d_m=0))

    assert document.skeleton.divisor("D").m == 0


def test_strict_mode_is_forwarded() -> None:
    text = _p2().replace('c = ["-1"]', 'c = ["-1"]\nm = 2')

    assert load_skeleton_document(text).skeleton.divisor("E").m == 2
    with pytest.raises(ValidationError):
        load_skeleton_document(text, strict=True)


def test_conventions_round_trip() -> None:
    document = load_skeleton_document(_p2(extra="\n[conventions]\nadded_invariant_m = 2\n"))

    assert document.conventions == Conventions(added_invariant_m=2)
    assert document_to_dict(document)["conventions"] == {"added_invariant_m": 2}
    assert load_skeleton_document(format_skeleton_document(document)).conventions.added_invariant_m == 2


def test_invalid_convention() -> None:
    with pytest.raises(ParseError) as caught:
        load_skeleton_document(_p2(extra="\n[conventions]\nadded_invariant_m = 0\n"))

    assert caught.value.field == "added_invariant_m"


def test_cox_output_carries_provenance() -> None:
    result = cox_transform(fix_s2())
    text = format_skeleton_document(SkeletonDocument(result.skeleton, provenance=result.provenance))

    document = load_skeleton_document(text)
    assert document.provenance == {"D'": "D", "D''": "D"}
    assert document.skeleton == result.skeleton


def test_varsigma_is_written_in_root_order() -> None:
    payload = document_to_dict(SkeletonDocument(fix_f1()))

    assert payload["divisors"][0]["varsigma"] == ["c1.1"]
    assert payload["root_system"] == [{"type": "A", "rank": 1}, {"type": "A", "rank": 1}]
    assert "conventions" not in payload
