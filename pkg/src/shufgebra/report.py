"""Structured pass/fail records for the verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass
class CaseResult:
    """One checked statement instance."""

    statement: str
    params: dict
    status: str
    witness: str | None = None
    elapsed: float = 0.0

    def as_record(self) -> dict:
        rec = {"statement": self.statement, "params": self.params, "status": self.status}
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


@dataclass
class SuiteReport:
    """All case results of one named suite run."""

    suite: str
    config: dict
    cases: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.cases)

    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.cases:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_json(self) -> str:
        """Canonical JSON; timings are excluded so reports are reproducible."""
        payload = {
            "suite": self.suite,
            "config": self.config,
            "passed": self.passed,
            "cases": [c.as_record() for c in self.cases],
        }
        return json.dumps(payload, sort_keys=True)

    def render_table(self) -> str:
        lines = [f"suite: {self.suite}  config: {self.config}"]
        for c in self.cases:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"  [{c.status}] {c.statement} {params}".rstrip()
            if c.elapsed >= 0.0005:
                line += f"  ({c.elapsed:.3f}s)"
            if c.witness:
                line += f"\n         witness: {c.witness}"
            lines.append(line)
        counts = self.counts()
        lines.append(
            f"  {counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIP]} skipped"
        )
        return "\n".join(lines)
