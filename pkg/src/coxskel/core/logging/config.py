"""Rich logging configuration helpers for coxskel."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from rich.console import Console
from rich.logging import RichHandler

PROJECT_LOGGER = "coxskel"


class WorkerThreadFilter(logging.Filter):
    """Prefix records emitted from batch worker threads with the worker name."""

    def filter(self, record: logging.LogRecord) -> bool:
        if record.threadName and record.threadName.startswith("ThreadPoolExecutor"):
            worker = record.threadName.rsplit("_", 1)[-1]
            record.msg = f"[dim]worker {worker}[/] {record.msg}"
        return True


def configure_logging(
    *,
    level: int = logging.WARNING,
    filtered_loggers: Iterable[str] | None = None,
) -> logging.Logger:
    """
    Configure the Rich logging handler and return the project logger.

    Records go to stderr so machine-readable stdout stays clean.
    Subsequent calls only adjust the level because logging.basicConfig applies once.
    """
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[
            RichHandler(
                console=Console(stderr=True),
                rich_tracebacks=True,
                show_time=False,
                markup=True,
            )
        ],
    )

    project_logger = logging.getLogger(PROJECT_LOGGER)
    project_logger.setLevel(level)
    if not any(isinstance(f, WorkerThreadFilter) for f in project_logger.filters):
        project_logger.addFilter(WorkerThreadFilter())

    for name in filtered_loggers or ():
        logging.getLogger(name).setLevel(max(level, logging.WARNING))

    return project_logger
