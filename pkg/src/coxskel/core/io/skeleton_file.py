"""TOML skeleton files: decoding, validation and canonical formatting."""

from __future__ import annotations

import re
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

try:  # Python 3.11+
    import tomllib as tomli  # type: ignore[import-not-found]
except ModuleNotFoundError:  # pragma: no cover - fallback for older interpreters
    import tomli  # type: ignore[no-redef]
import tomli_w

from coxskel.core.errors import (
    DimensionMismatch,
    DuplicateName,
    InadmissibleSpec,
    ParseError,
    UnknownLabel,
    ValidationError,
)
from coxskel.core.roots import RootSystemSpec, build_root_system
from coxskel.core.skeleton import Divisor, SphericalSkeleton, validate

TOP_LEVEL_KEYS = ("name", "spherical_roots", "root_system", "divisors", "conventions", "provenance")
COMPONENT_KEYS = ("type", "rank")
DIVISOR_KEYS = ("name", "varsigma", "c", "m")
CONVENTION_KEYS = ("added_invariant_m",)

_TOML_LINE = re.compile(r"line (\d+)")


@dataclass(frozen=True)
class Conventions:
    """Per-file choices for data the skeleton itself does not determine."""

    added_invariant_m: int = 1

    def is_default(self) -> bool:
        return self.added_invariant_m == 1


@dataclass(frozen=True)
class SkeletonDocument:
    skeleton: SphericalSkeleton
    conventions: Conventions = field(default_factory=Conventions)
    provenance: dict[str, str] | None = field(default=None, hash=False)


def _line_of(text: str, key: str) -> int | None:
    pattern = re.compile(rf"^\s*\"?{re.escape(key)}\"?\s*=", re.MULTILINE)
    match = pattern.search(text)
    return text.count("\n", 0, match.start()) + 1 if match else None


def _fraction(value: object, text: str, field_name: str) -> Fraction:
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ParseError(
        f"expected an integer or a 'p/q' string, got {value!r}",
        line=_line_of(text, field_name),
        field=field_name,
    )


def _reject_unknown(payload: Mapping[str, Any], allowed: tuple[str, ...], text: str, where: str) -> None:
    for key in payload:
        if key not in allowed:
            raise ParseError(f"unknown key '{key}' in {where}", line=_line_of(text, key), field=key)


def _require_list(payload: Mapping[str, Any], key: str, text: str) -> list[Any]:
    value = payload.get(key)
    if not isinstance(value, list):
        raise ParseError(f"'{key}' must be a list", line=_line_of(text, key), field=key)
    return value


def _decode_spec(payload: Mapping[str, Any], text: str) -> RootSystemSpec:
    components = _require_list(payload, "root_system", text)
    if not components:
        raise ParseError("a root system needs at least one component", field="root_system")
    pairs: list[tuple[str, int]] = []
    for component in components:
        if not isinstance(component, Mapping):
            raise ParseError("root_system entries must be tables", field="root_system")
        _reject_unknown(component, COMPONENT_KEYS, text, "root_system")
        kind, rank = component.get("type"), component.get("rank")
        if not isinstance(kind, str) or isinstance(rank, bool) or not isinstance(rank, int):
            raise ParseError("root_system entries need a string 'type' and an integer 'rank'", field="root_system")
        pairs.append((kind, rank))
    try:
        return RootSystemSpec.from_pairs(pairs)
    except InadmissibleSpec as exc:
        raise ParseError(str(exc), line=_line_of(text, "type"), field="root_system") from exc


def _decode_divisor(entry: object, r: int, text: str) -> Divisor:
    if not isinstance(entry, Mapping):
        raise ParseError("divisors entries must be tables", field="divisors")
    _reject_unknown(entry, DIVISOR_KEYS, text, "divisors")
    name = entry.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("every divisor needs a non-empty 'name'", field="name")
    varsigma = entry.get("varsigma", [])
    if not isinstance(varsigma, list) or not all(isinstance(label, str) for label in varsigma):
        raise ParseError(f"divisor '{name}': 'varsigma' must be a list of labels", field="varsigma")
    values = entry.get("c")
    if not isinstance(values, list):
        raise ParseError(f"divisor '{name}': 'c' must be a list", field="c")
    if len(values) != r:
        raise ParseError(
            f"divisor '{name}' has {len(values)} values for {r} spherical roots",
            line=_line_of(text, "c"),
            field="c",
        )
    m = entry.get("m", 1)
    if isinstance(m, bool) or not isinstance(m, int):
        raise ParseError(f"divisor '{name}': 'm' must be an integer", line=_line_of(text, "m"), field="m")
    return Divisor(name, frozenset(varsigma), tuple(_fraction(v, text, "c") for v in values), m)


def decode_skeleton_document(text: str, *, default_name: str = "") -> SkeletonDocument:
    """Decode a skeleton file without running the validation rules."""

    try:
        payload = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        match = _TOML_LINE.search(str(exc))
        line = getattr(exc, "lineno", None) or (int(match.group(1)) if match else None)
        raise ParseError(str(exc), line=line) from exc

    _reject_unknown(payload, TOP_LEVEL_KEYS, text, "the file")
    name = payload.get("name", default_name)
    if not isinstance(name, str):
        raise ParseError("'name' must be a string", line=_line_of(text, "name"), field="name")

    spec = _decode_spec(payload, text)
    roots = _require_list(payload, "spherical_roots", text)
    sigma_sc: list[tuple[Fraction, ...]] = []
    for root in roots:
        if not isinstance(root, list):
            raise ParseError("each spherical root is a list of coefficients", field="spherical_roots")
        sigma_sc.append(tuple(_fraction(v, text, "spherical_roots") for v in root))

    entries = payload.get("divisors", [])
    if not isinstance(entries, list):
        raise ParseError("'divisors' must be an array of tables", field="divisors")
    divisors = [_decode_divisor(entry, len(sigma_sc), text) for entry in entries]

    try:
        skeleton = SphericalSkeleton(build_root_system(spec), tuple(sigma_sc), tuple(divisors), name)
    except DimensionMismatch as exc:
        raise ParseError(str(exc), line=_line_of(text, "spherical_roots"), field="spherical_roots") from exc
    except UnknownLabel as exc:
        raise ParseError(str(exc), line=_line_of(text, "varsigma"), field="varsigma") from exc
    except DuplicateName as exc:
        raise ParseError(str(exc), field="name") from exc

    conventions_payload = payload.get("conventions", {})
    if not isinstance(conventions_payload, Mapping):
        raise ParseError("'conventions' must be a table", field="conventions")
    _reject_unknown(conventions_payload, CONVENTION_KEYS, text, "conventions")
    invariant_m = conventions_payload.get("added_invariant_m", 1)
    if isinstance(invariant_m, bool) or not isinstance(invariant_m, int) or invariant_m < 1:
        raise ParseError(
            "'added_invariant_m' must be a positive integer",
            line=_line_of(text, "added_invariant_m"),
            field="added_invariant_m",
        )

    provenance = payload.get("provenance")
    if provenance is not None:
        if not isinstance(provenance, Mapping) or not all(isinstance(v, str) for v in provenance.values()):
            raise ParseError("'provenance' maps divisor names to source names", field="provenance")
        provenance = dict(provenance)

    return SkeletonDocument(skeleton, Conventions(invariant_m), provenance)


def load_skeleton_document(text: str, *, strict: bool = False, default_name: str = "") -> SkeletonDocument:
    document = decode_skeleton_document(text, default_name=default_name)
    violations = validate(document.skeleton, strict=strict)
    if violations:
        raise ValidationError(violations)
    return document


def parse_skeleton_file(text: str, *, strict: bool = False) -> SphericalSkeleton:
    """Decode and validate skeleton file text."""

    return load_skeleton_document(text, strict=strict).skeleton


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path.name} is not valid UTF-8") from exc
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def read_skeleton_document(path: Path, *, strict: bool = False) -> SkeletonDocument:
    return load_skeleton_document(read_text(path), strict=strict, default_name=path.stem)


def skeleton_to_dict(sk: SphericalSkeleton) -> dict[str, Any]:
    return {
        "name": sk.name,
        "spherical_roots": [[str(a) for a in sigma] for sigma in sk.sigma_sc],
        "root_system": [{"type": c.type, "rank": c.rank} for c in sk.rs.spec.components],
        "divisors": [
            {
                "name": d.name,
                "varsigma": sorted(d.varsigma, key=sk.rs.index),
                "c": [str(a) for a in d.c],
                "m": d.m,
            }
            for d in sk.divisors
        ],
    }


def document_to_dict(document: SkeletonDocument) -> dict[str, Any]:
    payload = skeleton_to_dict(document.skeleton)
    if not document.conventions.is_default():
        payload["conventions"] = {"added_invariant_m": document.conventions.added_invariant_m}
    if document.provenance:
        payload["provenance"] = dict(document.provenance)
    return payload


def format_skeleton_document(document: SkeletonDocument) -> str:
    """Canonical TOML text; parsing it back yields the same document."""

    return tomli_w.dumps(document_to_dict(document))


def format_skeleton(
    sk: SphericalSkeleton,
    *,
    provenance: Mapping[str, str] | None = None,
    conventions: Conventions | None = None,
) -> str:
    return format_skeleton_document(
        SkeletonDocument(sk, conventions or Conventions(), dict(provenance) if provenance else None)
    )
