"""Pass/fail records shared by the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    params: dict = field(default_factory=dict)
    detail: str = ""

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "params": self.params}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Verdict:
    """An ordered list of checks; passes when nothing failed."""

    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, ok: bool, detail: str = "", **params) -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, params, "" if ok else detail))
        return bool(ok)

    def skip(self, name: str, reason: str, **params):
        self.checks.append(Check(name, SKIP, params, reason))

    def extend(self, other: Verdict) -> Verdict:
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.checks)

    def __bool__(self):
        return self.passed

    def as_list(self) -> list[dict]:
        return [c.as_dict() for c in self.checks]
