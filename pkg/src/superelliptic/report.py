"""Plain report containers with JSON and aligned-text rendering."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    # diagnostic reports never fail the run; mismatches are just recorded
    diagnostic: bool = False

    @property
    def passed(self) -> bool:
        return self.diagnostic or not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"name": self.name, "status": "PASS" if self.passed else "FAIL",
                "diagnostic": self.diagnostic, "checked": self.checked,
                "failures": list(self.failures), "info": self.info}

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {len(self.failures)} flagged" if self.failures else ""
        kind = " (diagnostic)" if self.diagnostic else ""
        return f"{self.name}: {status}{kind} [{self.checked} checked{extra}]"


def render_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for r in rows:
        for i, cell in enumerate(r):
            widths[i] = max(widths[i], len(cell))
    fmt = lambda r: "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(r)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)
