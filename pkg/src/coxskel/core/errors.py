"""Typed exceptions raised by the coxskel core."""

from __future__ import annotations

from collections.abc import Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from coxskel.core.skeleton.validation import Violation


class CoxskelError(Exception):
    """Base class for every error raised by coxskel."""


class DimensionMismatch(CoxskelError, ValueError):
    """Vectors or matrices with inconsistent lengths were combined."""


class InadmissibleSpec(CoxskelError, ValueError):
    """A root system component has an unknown type or an out-of-range rank."""


class UnknownLabel(CoxskelError, KeyError):
    """A simple-root label does not name a node of the root system."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


class InvalidSkeleton(CoxskelError):
    """An operation received a skeleton that fails validation."""

    def __init__(self, violations: Sequence[Violation]) -> None:
        self.violations = tuple(violations)
        summary = "; ".join(str(v) for v in self.violations) or "invalid skeleton"
        super().__init__(summary)


class NotFactorial(CoxskelError):
    """The operation requires an empty set of non-factorial roots."""


class NotComplete(CoxskelError):
    """The operation requires a complete skeleton."""


class AxiomViolation(CoxskelError):
    """A structural statement the factorialization relies on failed at runtime."""

    def __init__(self, statement: str, detail: str) -> None:
        self.statement = statement
        self.detail = detail
        super().__init__(f"statement ({statement}) failed: {detail}")


class CertificateError(CoxskelError):
    """An exact certificate did not survive re-verification."""


class ParseError(CoxskelError):
    """Skeleton file text could not be decoded."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None) -> None:
        self.message = message
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")


class ValidationError(CoxskelError):
    """A parsed skeleton violates one or more validation rules."""

    def __init__(self, violations: Sequence[Violation]) -> None:
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class DuplicateName(CoxskelError, ValueError):
    """Two divisors of one skeleton share a name."""


class OutputError(CoxskelError):
    """A result could not be written to its destination."""
