"""Check results shared by the validators and verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    residual: float | None = None
    counterexample: tuple | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.residual is not None:
            out["residual"] = float(self.residual)
        if self.counterexample is not None:
            out["counterexample"] = list(self.counterexample)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def max_residual(self) -> float:
        vals = [c.residual for c in self.checks if c.residual is not None]
        return max(vals, default=0.0)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def to_dict(self) -> dict:
        out = {"title": self.title, "passed": self.passed,
               "checks": [c.to_dict() for c in self.checks]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def __str__(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'ok' if c.passed else 'FAIL'}] {c.name}"
            if c.residual is not None:
                line += f"  residual={c.residual:.3e}"
            if c.counterexample is not None:
                line += f"  at {tuple(c.counterexample)}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)
