"""Spherical skeletons, their validation and derived sets."""

from __future__ import annotations

from .derived import DerivedSets, derived_sets, is_complete, is_factorial
from .models import Divisor, SphericalSkeleton, simple_root_multiple
from .validation import Violation, ensure_valid, validate

__all__ = [
    "DerivedSets",
    "Divisor",
    "SphericalSkeleton",
    "Violation",
    "derived_sets",
    "ensure_valid",
    "is_complete",
    "is_factorial",
    "simple_root_multiple",
    "validate",
]
