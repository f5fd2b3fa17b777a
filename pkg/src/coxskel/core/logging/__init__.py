"""
Logging utilities for coxskel.

Provides a small facade so callers can import ``configure_logging`` from
``coxskel.core.logging`` without depending on the underlying module layout.
"""

from __future__ import annotations

from .config import PROJECT_LOGGER, configure_logging

__all__ = ["PROJECT_LOGGER", "configure_logging"]
