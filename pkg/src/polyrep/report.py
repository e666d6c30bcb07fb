"""Pass/fail bookkeeping shared by the verification suites."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool = True
    cases: int = 0
    witness: Any = None

    def record(self, ok: bool, witness: Any = None) -> bool:
        self.cases += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness
        return ok


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: dict[str, Check] = field(default_factory=dict)
    seconds: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str) -> Check:
        if name not in self.checks:
            self.checks[name] = Check(name)
        return self.checks[name]

    def record(self, name: str, ok: bool, witness: Any = None) -> bool:
        return self.check(name).record(ok, witness)

    def finish(self) -> "Report":
        self.seconds = time.perf_counter() - self._start
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.passed]

    def merge(self, other: "Report", prefix: str = "") -> None:
        for name, c in other.checks.items():
            mine = self.check(prefix + name)
            mine.cases += c.cases
            if not c.passed and mine.passed:
                mine.passed = False
                mine.witness = c.witness

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "cases": c.cases,
                    "witness": None if c.witness is None else str(c.witness),
                }
                for c in self.checks.values()
            ],
        }

    def table(self) -> str:
        width = max((len(n) for n in self.checks), default=10)
        lines = [f"suite {self.suite} {self.params}"]
        for c in self.checks.values():
            status = "PASS" if c.passed else "FAIL"
            line = f"  {c.name:<{width}}  {status}  ({c.cases} cases)"
            if not c.passed:
                line += f"  witness: {c.witness}"
            lines.append(line)
        lines.append(f"  {'overall':<{width}}  {'PASS' if self.passed else 'FAIL'}  [{self.seconds:.2f}s]")
        return "\n".join(lines)
