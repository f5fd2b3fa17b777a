"""Per-skeleton reports and batch evaluation."""

from __future__ import annotations

from .batch import build_report, discover, evaluate, run_batch
from .config import RunSettings
from .models import BatchSummary, SkeletonReport

__all__ = ["BatchSummary", "RunSettings", "SkeletonReport", "build_report", "discover", "evaluate", "run_batch"]
