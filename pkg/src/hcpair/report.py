"""Pass/fail reports with witnesses, shared by every verifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: dict[str, Any] | None = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: dict | None = None, detail: str = "") -> Check:
        c = Check(name, passed, witness, detail)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [self.title]
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            line = f"  {c.name:<{width}}  {mark}"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
            if c.witness and not c.passed:
                for k, v in c.witness.items():
                    lines.append(f"  {'':<{width}}    {k}: {v}")
        lines.append("status: " + ("pass" if self.passed else "FAIL"))
        return "\n".join(lines)
