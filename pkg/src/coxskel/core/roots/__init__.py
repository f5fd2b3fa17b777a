"""Finite reduced root systems, their isomorphisms and parabolic dimensions."""

from __future__ import annotations

from .automorphisms import BasedAutomorphism, based_automorphisms, root_isomorphisms
from .parabolic import dim_gp
from .spec import ComponentSpec, RootSystemSpec
from .system import RootSystem, build_root_system

__all__ = [
    "BasedAutomorphism",
    "ComponentSpec",
    "RootSystem",
    "RootSystemSpec",
    "based_automorphisms",
    "build_root_system",
    "dim_gp",
    "root_isomorphisms",
]
