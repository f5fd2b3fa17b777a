"""Dimensions of flag varieties G/P."""

from __future__ import annotations

from collections.abc import Iterable

from .system import RootSystem


def dim_gp(rs: RootSystem, moved: Iterable[str]) -> int:
    """Number of positive roots whose support meets ``moved``.

    This is dim G/P for the parabolic P whose Levi has simple roots S \\ moved.
    """

    indices = rs.indices(frozenset(moved))
    return sum(1 for root in rs.positive_roots if any(root[i] for i in indices))
