"""Uniform pass/fail reporting for exact verifications."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["CheckResult"]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one exact check; both sides are rendered for failure reports."""

    ok: bool
    label: str
    lhs: str
    rhs: str

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"ok: {self.label}"
        return f"FAIL: {self.label}\n  left  = {self.lhs}\n  right = {self.rhs}"
