"""Checker for the bound ι ≤ dim G/P on complete skeletons."""

from __future__ import annotations

from coxskel.core.errors import CertificateError
from coxskel.core.exact import LpSolver
from coxskel.core.roots import dim_gp
from coxskel.core.skeleton import SphericalSkeleton, is_complete

from .invariant import iota
from .models import ConjectureVerdict, IotaReport, Verdict


def classify(report: IotaReport, dim: int, complete: bool) -> Verdict:
    if not complete:
        return Verdict.NOT_COMPLETE
    if not report.is_finite:
        raise CertificateError("a complete skeleton must have finite ι")
    if report.value < dim:
        return Verdict.HOLDS_STRICT
    if report.value == dim:
        return Verdict.HOLDS_WITH_EQUALITY
    return Verdict.VIOLATION


def check_conjecture(sk: SphericalSkeleton, *, solver: LpSolver | None = None) -> ConjectureVerdict:
    """Compare ι with dim G/P, P the parabolic of the roots moving no color.

    Equality is reported as such; it is not a certificate that the skeleton
    comes from a multiplicity-free space.
    """

    report = iota(sk, solver=solver)
    dim = dim_gp(sk.rs, sk.moved_roots)
    verdict = classify(report, dim, is_complete(sk, solver=solver))
    return ConjectureVerdict(iota=report, dim_gp=dim, verdict=verdict)
