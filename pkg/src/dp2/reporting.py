"""Claim reports: the unit of output of the verification replay."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class ClaimReport:
    """One verified statement: what was expected, what came out, and whether they agree."""

    id: str
    description: str
    expected: Any
    computed: Any
    passed: bool
    paper_ref: str
    known_discrepancy: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "description": self.description,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "paper_ref": self.paper_ref,
            "known_discrepancy": self.known_discrepancy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=_jsonable)

    def status(self) -> str:
        if self.known_discrepancy:
            return "FLAG"
        return "PASS" if self.passed else "FAIL"


def _jsonable(value: Any):
    if isinstance(value, tuple):
        return list(value)
    return str(value)


def report(claim_id: str, description: str, paper_ref: str, expected: Any,
           computed: Any, known_discrepancy: bool = False) -> ClaimReport:
    """Build a report, comparing expected and computed for the pass flag."""
    return ClaimReport(
        id=claim_id,
        description=description,
        expected=expected,
        computed=computed,
        passed=expected == computed,
        paper_ref=paper_ref,
        known_discrepancy=known_discrepancy,
    )
