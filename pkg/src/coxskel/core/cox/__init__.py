"""Cox-ring transform, class group, ambient weight data and fixed points."""

from __future__ import annotations

from .ambient import CoxAmbient, cox_ambient
from .fixed_point import has_fixed_point
from .transform import ClassGroup, CoxResult, class_group, cox_transform

__all__ = [
    "ClassGroup",
    "CoxAmbient",
    "CoxResult",
    "class_group",
    "cox_ambient",
    "cox_transform",
    "has_fixed_point",
]
