"""Check-result containers shared by all verifier functions.

Reports are plain frozen dataclasses; a report is truthy iff the check
passed, and the witness (when present) names the first failing basis
tuple in index order together with both sides of the violated identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class FormReport:
    symmetric: bool
    nondegenerate: bool
    invariant: bool
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.symmetric and self.nondegenerate and self.invariant

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class CompositeReport:
    """Outcome of a check made of named sub-checks (bialgebras, doubles)."""

    name: str
    parts: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(part.passed for part in self.parts)

    @property
    def failing(self) -> str | None:
        for part in self.parts:
            if not part.passed:
                return part.name
        return None

    def part(self, name: str):
        for p in self.parts:
            if p.name == name:
                return p
        raise KeyError(name)

    def __bool__(self) -> bool:
        return self.passed
