"""Root system construction from a type/rank specification."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from coxskel.core.errors import UnknownLabel
from coxskel.core.exact import Mat, Vec

from .spec import ComponentSpec, RootSystemSpec


def _chain(rank: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(rank - 1)]


def _component_gram(component: ComponentSpec) -> list[list[int]]:
    """Symmetric integral form in Bourbaki numbering (0-based here)."""

    n = component.rank
    gram = [[0] * n for _ in range(n)]
    kind = component.type

    if kind in {"A", "D", "E"}:
        for i in range(n):
            gram[i][i] = 2
        if kind == "A":
            edges = _chain(n)
        elif kind == "D":
            edges = _chain(n - 1) + [(n - 3, n - 1)]
        else:
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
            edges = [(i, j) for i, j in edges if j < n]
        for i, j in edges:
            gram[i][j] = gram[j][i] = -1
    elif kind == "B":
        for i in range(n):
            gram[i][i] = 2
        gram[n - 1][n - 1] = 1
        for i, j in _chain(n):
            gram[i][j] = gram[j][i] = -1
    elif kind == "C":
        for i in range(n):
            gram[i][i] = 2
        gram[n - 1][n - 1] = 4
        for i, j in _chain(n - 1):
            gram[i][j] = gram[j][i] = -1
        gram[n - 2][n - 1] = gram[n - 1][n - 2] = -2
    elif kind == "F":
        gram = [
            [4, -2, 0, 0],
            [-2, 4, -2, 0],
            [0, -2, 2, -1],
            [0, 0, -1, 2],
        ]
    else:
        gram = [[2, -3], [-3, 6]]
    return gram


@dataclass(frozen=True)
class RootSystem:
    """A finite reduced root system realized in simple-root coordinates.

    Node ``k`` (0-based, across components) carries the label ``c<i>.<j>``;
    the simple root at node ``k`` is the k-th unit vector.
    """

    spec: RootSystemSpec
    labels: tuple[str, ...] = field(compare=False)
    component_of: tuple[int, ...] = field(compare=False)
    gram: Mat = field(compare=False, repr=False)
    cartan_matrix: Mat = field(compare=False, repr=False)
    positive_roots: tuple[Vec, ...] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def simple_roots(self) -> dict[str, Vec]:
        n = self.rank
        return {
            label: tuple(Fraction(int(i == k)) for i in range(n))
            for k, label in enumerate(self.labels)
        }

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"'{label}' is not a simple root of {self.spec}") from None

    def indices(self, labels: frozenset[str] | set[str] | tuple[str, ...]) -> list[int]:
        return sorted(self.index(label) for label in labels)

    def pairing(self, beta: Vec, j: int) -> Fraction:
        """⟨β, α_j^∨⟩."""

        return sum((beta[i] * self.cartan_matrix[i][j] for i in range(self.rank) if beta[i]), Fraction(0))

    def __str__(self) -> str:
        return str(self.spec)


def _positive_roots(cartan: Mat, rank: int) -> tuple[Vec, ...]:
    simple = [tuple(Fraction(int(i == k)) for i in range(rank)) for k in range(rank)]
    known: set[Vec] = set(simple)
    ordered: list[Vec] = list(simple)
    layer = list(simple)
    while layer:
        following: list[Vec] = []
        for beta in layer:
            for j in range(rank):
                p = 0
                probe = beta
                while True:
                    probe = tuple(b - (1 if i == j else 0) for i, b in enumerate(probe))
                    if probe not in known:
                        break
                    p += 1
                value = sum((beta[i] * cartan[i][j] for i in range(rank)), Fraction(0))
                if p - value > 0:
                    candidate = tuple(b + (1 if i == j else 0) for i, b in enumerate(beta))
                    if candidate not in known:
                        known.add(candidate)
                        following.append(candidate)
        following.sort(key=lambda root: tuple(-c for c in root))
        ordered.extend(following)
        layer = following
    return tuple(ordered)


@lru_cache(maxsize=64)
def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Construct simple roots, Cartan matrix and positive roots for ``spec``."""

    n = spec.rank
    gram = [[0] * n for _ in range(n)]
    labels: list[str] = []
    component_of: list[int] = []
    offset = 0
    for c_index, component in enumerate(spec.components, start=1):
        block = _component_gram(component)
        for i in range(component.rank):
            labels.append(f"c{c_index}.{i + 1}")
            component_of.append(c_index - 1)
            for j in range(component.rank):
                gram[offset + i][offset + j] = block[i][j]
        offset += component.rank

    gram_mat = tuple(tuple(Fraction(v) for v in row) for row in gram)
    cartan = tuple(
        tuple(Fraction(2 * gram[i][j], gram[j][j]) for j in range(n))
        for i in range(n)
    )
    return RootSystem(
        spec=spec,
        labels=tuple(labels),
        component_of=tuple(component_of),
        gram=gram_mat,
        cartan_matrix=cartan,
        positive_roots=_positive_roots(cartan, n),
    )
