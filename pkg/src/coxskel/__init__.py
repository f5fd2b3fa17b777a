"""Exact Luna-Vust invariants of Cox rings of spherical varieties."""

from __future__ import annotations
