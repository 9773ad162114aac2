"""Exceptions and the validation report shared across the package."""
from __future__ import annotations

from dataclasses import dataclass, field


class BpbwError(Exception):
    """Base class for errors raised by this package."""


class ContextMismatch(BpbwError, ValueError):
    """Operands live over different scalar contexts or groups."""


class ParseError(BpbwError, ValueError):
    """Malformed scalar or element expression."""

    def __init__(self, message: str, position: int | None = None, text: str | None = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class NotAUnit(BpbwError, ValueError):
    """A negative power was requested of a scalar that is not a unit."""


class DefinitionError(BpbwError, ValueError):
    """A definition file is not schema-valid or has dangling references."""


@dataclass
class ValidationReport:
    """Collected problems from a validation pass. Empty means valid."""

    subject: str = ""
    issues: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, message: str) -> None:
        self.issues.append(message)

    def extend(self, other: "ValidationReport") -> None:
        self.issues.extend(other.issues)

    def lines(self) -> list[str]:
        if self.ok:
            return [f"OK {self.subject}".rstrip()]
        return [f"INVALID {msg}" for msg in self.issues]
