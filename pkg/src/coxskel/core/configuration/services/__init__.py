"""Domain-specific helpers for configuration management."""

from . import analysis, logging, outputs

__all__ = [
    "analysis",
    "logging",
    "outputs",
]
