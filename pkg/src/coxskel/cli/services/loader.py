"""Reading skeleton files and resolving run settings for a command."""

from __future__ import annotations

from pathlib import Path

from coxskel.core.configuration import get_config_manager
from coxskel.core.io import SkeletonDocument, read_skeleton_document
from coxskel.core.report import RunSettings


def run_settings(
    *,
    strict: bool | None = None,
    verify_lp: bool | None = None,
    workers: int | None = None,
) -> RunSettings:
    return get_config_manager().build_run_settings(strict=strict, verify_lp=verify_lp, workers=workers)


def load_document(path: Path, settings: RunSettings) -> SkeletonDocument:
    return read_skeleton_document(path, strict=settings.strict)


def invariant_multiplicity(document: SkeletonDocument, settings: RunSettings) -> int:
    """m of an added G-invariant divisor: the file's convention, else the configured default, else 1."""

    if not document.conventions.is_default() or settings.added_invariant_m is None:
        return document.conventions.added_invariant_m
    return settings.added_invariant_m
