"""Machine-checkable verification reports.

A report is an ordered list of checks, each comparing a computed value to an
expected one under plain equality after canonicalization (SW data is compared
as magnitude multisets by the callers).  Serialization is deterministic:
repeated runs of the same pipeline produce byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

REPORT_VERSION = "1"

# provenance of an expected value: stated by the source construction,
# derived here by an independent route, or a defining/trivial instance
REPORTED = "reported"
DERIVED = "derived"
DEFINITION = "definition"


def canonical(value):
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if isinstance(value, dict):
        return {str(k): canonical(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    return str(value)


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    expected: object
    computed: object
    provenance: str = DERIVED

    def __post_init__(self):
        object.__setattr__(self, "expected", canonical(self.expected))
        object.__setattr__(self, "computed", canonical(self.computed))

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "paper_ref": self.id,
            "provenance_tag": self.provenance,
        }


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, description: str, expected, computed, provenance: str = DERIVED) -> Check:
        check = Check(id, description, expected, computed, provenance)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def all_pass(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "checks": [c.to_dict() for c in self.checks],
            "summary": {"passed": self.passed, "failed": self.failed},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def to_text(self) -> str:
        lines = []
        width = max((len(c.id) for c in self.checks), default=0)
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            line = f"[{status}] {c.id:<{width}}  {c.description}"
            if not c.passed:
                line += f"  (expected {c.expected!r}, computed {c.computed!r})"
            lines.append(line)
        lines.append(f"summary: {self.passed} passed, {self.failed} failed")
        return "\n".join(lines)
