"""Isomorphism of spherical skeletons."""

from __future__ import annotations

from .search import SkeletonIso, are_isomorphic, verify_isomorphism

__all__ = ["SkeletonIso", "are_isomorphic", "verify_isomorphism"]
