"""Verification results and their deterministic JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

SCHEMA = "spindaha-report/1"

__all__ = ["Check", "Report", "SCHEMA"]


@dataclass
class Check:
    relation: str
    lhs: str
    rhs: str
    equal: bool
    probe_agreement: Optional[bool] = None
    map: Optional[str] = None
    note: Optional[str] = None
    flagged: bool = False

    @property
    def ok(self) -> bool:
        """A flagged check records a known discrepancy and never counts as a failure."""
        if self.flagged:
            return True
        return self.equal and self.probe_agreement is not False

    def to_dict(self) -> dict:
        d = {
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "probe_agreement": self.probe_agreement,
        }
        if self.map is not None:
            d["map"] = self.map
        if self.note is not None:
            d["note"] = self.note
        if self.flagged:
            d["flagged"] = True
        return d


@dataclass
class Report:
    suite: str
    algebra: str
    type: str
    params: dict
    seed: int
    checks: list[Check] = field(default_factory=list)

    def extend(self, checks) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def flagged(self) -> list[Check]:
        return [c for c in self.checks if c.flagged]

    def summary(self) -> dict:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks if c.ok and not c.flagged),
            "failed": len(self.failures()),
            "flagged": len(self.flagged()),
            "ok": self.passed,
        }

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "algebra": self.algebra,
            "type": self.type,
            "params": self.params,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            if c.flagged:
                tag = "FLAG"
            else:
                tag = "ok  " if c.ok else "FAIL"
            where = f" [{c.map}]" if c.map else ""
            lines.append(f"{tag} {c.relation}{where}")
            if not c.ok:
                lines.append(f"     lhs: {c.lhs}")
                lines.append(f"     rhs: {c.rhs}")
            if c.note:
                lines.append(f"     note: {c.note}")
        s = self.summary()
        lines.append(
            f"{self.suite} {self.algebra} {self.type}: {s['passed']} passed, "
            f"{s['failed']} failed, {s['flagged']} flagged"
        )
        return "\n".join(lines)
