"""Per-file evaluation and directory batch runs."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from rich.markup import escape

from coxskel.core.cox import class_group, has_fixed_point
from coxskel.core.errors import CoxskelError, ParseError
from coxskel.core.iota import check_conjecture, format_value, iota_affine
from coxskel.core.io import decode_skeleton_document, read_text
from coxskel.core.skeleton import SphericalSkeleton, derived_sets, is_complete, validate

from .config import RunSettings
from .models import BatchSummary, SkeletonReport

logger = logging.getLogger("coxskel")

SKELETON_SUFFIX = ".skel"


def evaluate(sk: SphericalSkeleton, file: str, settings: RunSettings) -> SkeletonReport:
    """Compute every report column for a valid skeleton."""

    solver = settings.solver()
    sets = derived_sets(sk)
    group = class_group(sk)
    factorial = not sets.script_S
    verdict = check_conjecture(sk, solver=solver)
    affine = format_value(iota_affine(sk, solver=solver).value) if factorial else None
    return SkeletonReport(
        file=file,
        name=sk.name,
        valid=True,
        script_S=tuple(sorted(sets.script_S)),
        cl_rank=group.rank,
        cl_generators=group.generators,
        complete=is_complete(sk, solver=solver),
        factorial=factorial,
        fixed_point=has_fixed_point(sk, solver=solver),
        iota=format_value(verdict.iota.value),
        iota_affine=affine,
        dim_gp=verdict.dim_gp,
        verdict=str(verdict.verdict),
    )


def build_report(path: Path, settings: RunSettings) -> SkeletonReport:
    """Report for one file; parse, validation and certificate failures become report fields."""

    try:
        document = decode_skeleton_document(read_text(path), default_name=path.stem)
    except ParseError as exc:
        logger.warning("[yellow]%s[/]: %s", escape(path.name), escape(str(exc)))
        return SkeletonReport(file=path.name, name=path.stem, valid=False, error=str(exc))

    sk = document.skeleton
    violations = validate(sk, strict=settings.strict)
    if violations:
        return SkeletonReport(
            file=path.name,
            name=sk.name,
            valid=False,
            violations=tuple(v.to_dict() for v in violations),
        )
    try:
        return evaluate(sk, path.name, settings)
    except CoxskelError as exc:
        logger.warning("[red]%s[/]: %s", escape(path.name), escape(str(exc)))
        return SkeletonReport(file=path.name, name=sk.name, valid=True, error=f"{type(exc).__name__}: {exc}")


def discover(directory: Path) -> list[Path]:
    return sorted(
        (p for p in directory.iterdir() if p.is_file() and p.suffix == SKELETON_SUFFIX),
        key=lambda p: p.name,
    )


def run_batch(directory: Path, settings: RunSettings) -> BatchSummary:
    """Evaluate every skeleton file in ``directory``; reports are sorted by file name."""

    files = discover(directory)
    logger.info("Evaluating %d skeleton files in %s with %d workers", len(files), directory, settings.workers)
    if settings.workers <= 1 or len(files) <= 1:
        reports = [build_report(path, settings) for path in files]
    else:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            reports = list(pool.map(lambda path: build_report(path, settings), files))
    return BatchSummary(tuple(sorted(reports, key=lambda report: report.file)))
