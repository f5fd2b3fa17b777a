"""Mapping from core exceptions to process exit codes."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from enum import IntEnum

import typer
from rich.markup import escape

from coxskel.core.errors import (
    AxiomViolation,
    CoxskelError,
    InvalidSkeleton,
    NotComplete,
    NotFactorial,
    ValidationError,
)

from ..context import CliContext


class ExitCode(IntEnum):
    OK = 0
    INVALID = 1
    VIOLATION = 2
    PRECONDITION = 3


PRECONDITION_ERRORS: tuple[type[CoxskelError], ...] = (NotComplete, NotFactorial, AxiomViolation)


def exit_code_for(exc: CoxskelError) -> ExitCode:
    if isinstance(exc, PRECONDITION_ERRORS):
        return ExitCode.PRECONDITION
    return ExitCode.INVALID


def _describe(exc: CoxskelError) -> list[str]:
    if isinstance(exc, (ValidationError, InvalidSkeleton)):
        return [f"[red]invalid:[/] {escape(str(violation))}" for violation in exc.violations]
    label = type(exc).__name__
    return [f"[red]{label}:[/] {escape(str(exc))}"]


@contextmanager
def handle_errors(context: CliContext) -> Iterator[None]:
    """Report a core error on the error stream and exit with its code."""

    try:
        yield
    except CoxskelError as exc:
        for line in _describe(exc):
            context.error(line)
        raise typer.Exit(int(exit_code_for(exc))) from exc
