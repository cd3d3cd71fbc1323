"""Check reports: line-item verification records shared by the certificate
and recipe verifiers.

Each line is either recomputed here ("verified") or imported as a fact
established elsewhere and only recorded ("paper-certified"); the split is
explicit so a reader of a report can see which numbers this code actually
checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckLine", "Report"]


@dataclass(frozen=True)
class CheckLine:
    label: str
    detail: str
    mode: str  # "verified" | "paper-certified"
    cite: str
    ok: bool = True

    def render(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return f"[{status}] {self.label}: {self.detail} ({self.mode}, {self.cite})"


@dataclass(frozen=True)
class Report:
    title: str
    lines: tuple[CheckLine, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(line.ok for line in self.lines)

    def render(self) -> str:
        body = "\n".join("  " + line.render() for line in self.lines)
        verdict = "all checks passed" if self.passed else "CHECKS FAILED"
        return f"{self.title}\n{body}\n  => {verdict}"
