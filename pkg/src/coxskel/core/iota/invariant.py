"""The invariant ι in Σ^sc coordinates and in the weight coordinates of Spec R(X)."""

from __future__ import annotations

import logging
from fractions import Fraction

from coxskel.core.cox import cox_ambient
from coxskel.core.errors import CertificateError, NotFactorial
from coxskel.core.exact import Constraint, Infeasible, LpSolver, Optimal, Polyhedron, Vec, primitive, solve_lp
from coxskel.core.skeleton import SphericalSkeleton, ensure_valid, is_factorial

from .models import INFINITY, IotaReport

logger = logging.getLogger("coxskel")


def iota_polyhedron(sk: SphericalSkeleton) -> Polyhedron:
    """Q* ∩ T over coefficients t of ϑ = Σ tᵢσᵢ: tᵢ ≥ 0 and ⟨𝔠(D), ϑ⟩ ≥ −m_D."""

    r = sk.r
    rows = [Constraint(tuple(Fraction(int(i == k)) for i in range(r)), Fraction(0)) for k in range(r)]
    rows.extend(Constraint(d.c, Fraction(-d.m)) for d in sk.divisors)
    return Polyhedron(r, tuple(rows))


def iota_objective(sk: SphericalSkeleton) -> Vec:
    """Σ_D 𝔠(D), the linear part of Σ_D (m_D − 1 + ⟨𝔠(D), ϑ⟩)."""

    return tuple(sum((d.c[i] for d in sk.divisors), Fraction(0)) for i in range(sk.r))


def base_term(sk: SphericalSkeleton) -> Fraction:
    return Fraction(sum(d.m - 1 for d in sk.divisors))


def _check_lower_bound(report: IotaReport) -> IotaReport:
    if report.base_term < 0 or report.value < report.base_term:
        raise CertificateError(f"ι = {report.value} is below Σ(m_D − 1) = {report.base_term}")
    return report


def iota(sk: SphericalSkeleton, *, solver: LpSolver | None = None) -> IotaReport:
    """sup over Q* ∩ T of Σ_D (m_D − 1 + ⟨𝔠(D), ϑ⟩)."""

    ensure_valid(sk)
    base = base_term(sk)
    outcome = solve_lp(iota_polyhedron(sk), iota_objective(sk), solver=solver)
    if isinstance(outcome, Infeasible):
        raise CertificateError("the zero vector must satisfy every ι constraint")
    if isinstance(outcome, Optimal):
        report = IotaReport(value=base + outcome.value, base_term=base, witness=outcome.witness)
    else:
        report = IotaReport(value=INFINITY, base_term=base, ray=outcome.ray)
    logger.debug("ι(%s) = %s", sk.name or "skeleton", report.value)
    return _check_lower_bound(report)


def iota_affine(sk: SphericalSkeleton, *, solver: LpSolver | None = None) -> IotaReport:
    """ι computed on the weight lattice of Spec R(X), for factorial skeletons.

    Variables are (θ, t) with θ = λ + π*(Σ tᵢσᵢ), λ = Σ m_D e_D, θ ≥ 0 and
    t ≥ 0; the value is sup Σ_D θ_D − |Δ|.
    """

    ensure_valid(sk)
    if not is_factorial(sk):
        raise NotFactorial(f"{sk.name or 'skeleton'} has non-factorial roots; apply the Cox transform first")

    ambient = cox_ambient(sk)
    n = len(ambient.basis_index)
    r = ambient.r
    width = n + r
    rows: list[Constraint] = []
    for k in range(width):
        rows.append(Constraint(tuple(Fraction(int(i == k)) for i in range(width)), Fraction(0)))
    for k, d in enumerate(sk.divisors):
        # θ_D − Σ tᵢ⟨𝔠(D), σᵢ⟩ = m_D
        normal = tuple(Fraction(int(i == k)) for i in range(n)) + tuple(-v for v in ambient.pullback_matrix[k])
        rows.append(Constraint(normal, Fraction(d.m)))
        rows.append(Constraint(tuple(-a for a in normal), Fraction(-d.m)))
    objective = tuple([Fraction(1)] * n + [Fraction(0)] * r)

    base = base_term(sk)
    outcome = solve_lp(Polyhedron(width, tuple(rows)), objective, solver=solver)
    if isinstance(outcome, Infeasible):
        raise CertificateError("θ = λ must satisfy every affine ι constraint")
    if isinstance(outcome, Optimal):
        theta = outcome.witness[:n]
        t = outcome.witness[n:]
        lifted = tuple(value - d.m for value, d in zip(theta, sk.divisors, strict=True))
        if ambient.pullback(t) != lifted:
            raise CertificateError("θ − λ is not the pullback of the reported spherical-root coefficients")
        report = IotaReport(value=outcome.value - n, base_term=base, witness=t, ambient_witness=theta)
    else:
        report = IotaReport(value=INFINITY, base_term=base, ray=primitive(outcome.ray[n:]))
    return _check_lower_bound(report)
