"""Uniform run reports for the command line: per-item verdicts, counts,
exit code 0 exactly when nothing failed (undetermined and unsupported
items do not fail a run).  Output is deterministic; wall-clock time is
carried on the object but only rendered on request."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"
UNSUPPORTED = "unsupported"
INFO = "info"


@dataclass
class RunReport:
    command: str
    items: list = field(default_factory=list)
    elapsed: float | None = None

    def add(self, name: str, status: str, detail: str = ""):
        self.items.append({"name": name, "status": status, "detail": detail})

    @property
    def counts(self):
        out = {}
        for it in self.items:
            out[it["status"]] = out.get(it["status"], 0) + 1
        return out

    @property
    def exit_code(self) -> int:
        return 1 if any(it["status"] == FAIL for it in self.items) else 0

    def to_json(self, with_timing=False) -> str:
        payload = {
            "command": self.command,
            "items": self.items,
            "counts": self.counts,
            "exit_code": self.exit_code,
        }
        if with_timing and self.elapsed is not None:
            payload["elapsed_seconds"] = round(self.elapsed, 3)
        return json.dumps(payload, indent=1)

    def to_text(self, with_timing=False) -> str:
        lines = []
        width = max((len(it["name"]) for it in self.items), default=0)
        for it in self.items:
            line = f"{it['status'].upper():>12}  {it['name']:<{width}}"
            if it["detail"]:
                line += f"  {it['detail']}"
            lines.append(line.rstrip())
        summary = ", ".join(f"{v} {k}" for k, v in sorted(self.counts.items()))
        lines.append(f"[{self.command}] {summary or 'nothing to do'}; exit {self.exit_code}")
        if with_timing and self.elapsed is not None:
            lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"
