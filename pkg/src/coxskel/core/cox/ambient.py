"""Weight-lattice data of Spec R(X) in the basis (e_D) indexed by divisors."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from coxskel.core.errors import DimensionMismatch
from coxskel.core.exact import Mat, Vec, dot, mat_vec, transpose
from coxskel.core.skeleton import SphericalSkeleton, ensure_valid


@dataclass(frozen=True, slots=True)
class CoxAmbient:
    basis_index: tuple[str, ...]
    pullback_matrix: Mat
    t_bar_generators: tuple[Vec, ...]
    r: int

    def pullback(self, t: Sequence[Fraction]) -> Vec:
        """π*(Σ tᵢσᵢ) = Σ_D ⟨𝔠(D), Σ tᵢσᵢ⟩ e_D."""

        if len(t) != self.r:
            raise DimensionMismatch(f"expected {self.r} coefficients, got {len(t)}")
        return mat_vec(self.pullback_matrix, t)

    def push_forward(self, u: Sequence[Fraction]) -> Vec:
        """π∗ on the dual lattice; π∗(e_D*) = 𝔠(D)."""

        if len(u) != len(self.basis_index):
            raise DimensionMismatch(f"expected {len(self.basis_index)} coordinates, got {len(u)}")
        return tuple(dot(column, u) for column in self.t_bar_generators)

    def coordinate(self, name: str) -> int:
        return self.basis_index.index(name)


def cox_ambient(sk: SphericalSkeleton) -> CoxAmbient:
    ensure_valid(sk)
    matrix = sk.c_matrix
    return CoxAmbient(
        basis_index=sk.names,
        pullback_matrix=matrix,
        t_bar_generators=transpose(matrix, sk.r),
        r=sk.r,
    )
