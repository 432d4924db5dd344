"""Machine-readable verification reports.

A report is a deterministic JSON document: command echo, input digests,
one record per check with pass/fail/partial status, the exact order the
check was decided through, and witnesses (serialised scalars/series
terms) for every failure.  Timing is deliberately not part of the
document (byte-identical reports for fixed inputs); the CLI prints wall
time to stderr instead.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .series import order_str


@dataclass
class Check:
    name: str
    status: str                  # pass | fail | partial
    order: object = None         # decided through this weighted order
    detail: str = ""
    witnesses: list = field(default_factory=list)

    def to_json(self):
        doc = {"name": self.name, "status": self.status}
        if self.order is not None or self.status != "pass":
            doc["order"] = order_str(self.order)
        if self.detail:
            doc["detail"] = self.detail
        if self.witnesses:
            doc["witnesses"] = self.witnesses
        return doc


@dataclass
class VerificationReport:
    command: list
    inputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name, ok, order=None, detail="", witnesses=None) -> bool:
        self.checks.append(Check(name, "pass" if ok else "fail", order,
                                 detail, witnesses or []))
        return bool(ok)

    def add_partial(self, name, order=None, detail="", witnesses=None):
        self.checks.append(Check(name, "partial", order, detail,
                                 witnesses or []))

    @property
    def overall(self) -> str:
        if any(c.status == "fail" for c in self.checks):
            return "fail"
        return "pass"

    def exit_code(self) -> int:
        return 0 if self.overall == "pass" else 1

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "checks": [c.to_json() for c in self.checks],
            "overall": self.overall,
        }
        if self.data:
            doc["data"] = self.data
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            head = {"pass": "PASS", "fail": "FAIL", "partial": "PART"}[c.status]
            extra = f" [through order {order_str(c.order)}]" \
                if c.order is not None else ""
            detail = f"  {c.detail}" if c.detail else ""
            lines.append(f"{head}  {c.name}{extra}{detail}")
            for w in c.witnesses[:8]:
                lines.append(f"      witness: {w}")
            if len(c.witnesses) > 8:
                lines.append(f"      ... {len(c.witnesses) - 8} more")
        for key, val in self.data.items():
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
        lines.append(f"OVERALL: {self.overall.upper()}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()
