"""Exact rational vectors and matrices."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm

import sympy

from coxskel.core.errors import DimensionMismatch

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)


def to_vec(values: Iterable[int | str | Fraction]) -> Vec:
    return tuple(Fraction(v) for v in values)


def zeros(dim: int) -> Vec:
    return (ZERO,) * dim


def unit(dim: int, index: int, value: int | Fraction = 1) -> Vec:
    return tuple(Fraction(value) if i == index else ZERO for i in range(dim))


def check_width(rows: Sequence[Sequence[Fraction]], width: int | None = None) -> int:
    """Return the common row length, raising DimensionMismatch on ragged input."""

    if width is None:
        if not rows:
            return 0
        width = len(rows[0])
    for index, row in enumerate(rows):
        if len(row) != width:
            raise DimensionMismatch(f"row {index} has length {len(row)}, expected {width}")
    return width


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot pair vectors of length {len(u)} and {len(v)}")
    total = ZERO
    for a, b in zip(u, v, strict=True):
        if a and b:
            total += a * b
    return total


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatch(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v, strict=True))


def scale(k: int | Fraction, u: Sequence[Fraction]) -> Vec:
    return tuple(k * a for a in u)


def neg(u: Sequence[Fraction]) -> Vec:
    return tuple(-a for a in u)


def mat_vec(rows: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, x) for row in rows)


def transpose(rows: Sequence[Sequence[Fraction]], width: int) -> Mat:
    check_width(rows, width)
    return tuple(tuple(row[j] for row in rows) for j in range(width))


def primitive(u: Sequence[Fraction]) -> Vec:
    """Scale a nonzero vector to the primitive integer vector on its ray."""

    denominators = [a.denominator for a in u if a]
    if not denominators:
        return tuple(u)
    common = lcm(*denominators)
    integers = [int(a * common) for a in u]
    divisor = gcd(*integers)
    return tuple(Fraction(n // divisor) for n in integers)


def _matrix(rows: Sequence[Sequence[Fraction]], width: int) -> sympy.Matrix:
    entries = [sympy.Rational(Fraction(a).numerator, Fraction(a).denominator) for row in rows for a in row]
    return sympy.Matrix(len(rows), width, entries)


def _fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return _matrix(rows, check_width(rows)).rank()


def is_linearly_independent(vectors: Sequence[Sequence[Fraction]]) -> bool:
    if not vectors:
        return True
    check_width(vectors)
    return rank(vectors) == len(vectors)


def rref(rows: Sequence[Sequence[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""

    check_width(rows, width)
    if not rows:
        return [], []
    reduced, pivots = _matrix(rows, width).rref()
    return [[_fraction(a) for a in reduced.row(i)] for i in range(len(pivots))], list(pivots)


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[Vec]:
    """A basis of {x : row·x = 0 for every row}, one vector per free column of the rref."""

    check_width(rows, width)
    if not rows:
        return [unit(width, i) for i in range(width)]
    return [tuple(_fraction(a) for a in vector) for vector in _matrix(rows, width).nullspace()]


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], width: int) -> Vec | None:
    """The unique solution of rows·x = rhs, or None when it is not unique or does not exist."""

    if len(rows) != len(rhs):
        raise DimensionMismatch(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    augmented = [list(row) + [Fraction(b)] for row, b in zip(rows, rhs, strict=True)]
    reduced, pivots = rref(augmented, width + 1)
    if width in pivots or len(pivots) != width:
        return None
    return tuple(row[width] for row in reduced)
