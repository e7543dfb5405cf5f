from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "ok": self.ok, "detail": self.detail}


@dataclass
class VerificationReport:
    """Named list of pass/fail checks with witnesses in ``detail``."""

    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(ok), detail))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        return cls(d["name"], [Check(c["label"], c["ok"], c.get("detail", "")) for c in d["checks"]])

    def summary(self) -> str:
        bad = self.failures()
        if not bad:
            return f"{self.name}: pass ({len(self.checks)} checks)"
        return f"{self.name}: FAIL " + "; ".join(f"{c.label} [{c.detail}]" for c in bad[:3])
