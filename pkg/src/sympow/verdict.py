"""Pass/fail results shared by the checking code."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    ok: bool
    name: str = ""
    detail: str = ""

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{status} {self.name}{tail}"


def combine(name: str, verdicts) -> Verdict:
    """Conjunction of verdicts, reporting the first failure."""
    count = 0
    for v in verdicts:
        count += 1
        if not v.ok:
            return Verdict(False, name, f"{v.name}: {v.detail}" if v.name else v.detail)
    return Verdict(True, name, f"{count} checks")
