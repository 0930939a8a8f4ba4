"""Structured pass/fail reports shared by the audit routines and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    label: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"label": self.label, "pass": self.passed, "witness": self.witness, "detail": self.detail}


@dataclass
class AuditReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, label: str, passed: bool, witness: Any = None, detail: str = "") -> Check:
        if not passed and witness is None:
            witness = {"label": label}
        c = Check(label, bool(passed), witness if not passed else None, detail)
        self.checks.append(c)
        return c

    def extend(self, other: "AuditReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.label, c.passed, c.witness, c.detail))

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def summary(self) -> str:
        return f"{self.passed}/{len(self.checks)}"

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "checks": [c.to_json() for c in self.checks],
            "summary": {"passed": self.passed, "total": len(self.checks)},
            "info": self.info,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        width = max((len(c.label) for c in self.checks), default=0)
        lines = [self.subject]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f"  {c.detail}" if c.detail else ""
            lines.append(f"  {c.label.ljust(width)}  {mark}{extra}")
            if not c.passed:
                lines.append(f"  {'':{width}}  witness: {json.dumps(c.witness, sort_keys=True)}")
        lines.append(f"summary: {self.summary} passed")
        return "\n".join(lines)
