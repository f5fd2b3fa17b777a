"""Rich renderers for command output."""

from __future__ import annotations

from .report_view import ReportView

__all__ = ["ReportView"]
