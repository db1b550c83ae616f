"""Uniform result record for every verification routine."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one checked claim.

    claim: readable identifier of what was checked.
    range_checked: readable description of the parameter range.
    passed: whether every instance held.
    witnesses: number of instances checked.
    counterexample: first failing instance, rendered as text, else None.
    """

    claim: str
    range_checked: str
    passed: bool
    witnesses: int = 0
    counterexample: str | None = None

    def as_dict(self) -> dict:
        return {
            "claim": self.claim,
            "range": self.range_checked,
            "passed": self.passed,
            "witnesses": self.witnesses,
            "counterexample": self.counterexample,
        }
