"""Evaluation result containers with accounting invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class MetricValue:
    name: str
    value: float
    support: int

    def __post_init__(self):
        if self.support <= 0:
            raise ValueError("support must be positive")


@dataclass
class EvalReport:
    """Scores plus failure accounting for one task.

    Every instance is either scored or tallied under a failure cause, so
    scored + sum(failures) always reconstructs the instance total.
    """

    task: str
    values: list[MetricValue] = field(default_factory=list)
    failures: dict[str, int] = field(default_factory=dict)
    scored: int = 0
    manifest: str = ""

    @property
    def total(self) -> int:
        return self.scored + sum(self.failures.values())

    def add_failure(self, cause: str, n: int = 1) -> None:
        self.failures[cause] = self.failures.get(cause, 0) + n

    def check(self, expected_total: int) -> None:
        if self.total != expected_total:
            raise ValueError(
                f"{self.task}: {self.scored} scored + "
                f"{sum(self.failures.values())} failed != {expected_total}"
            )

    def to_dict(self) -> dict:
        return {
            "task": self.task,
            "metrics": [
                {"name": v.name, "value": v.value, "support": v.support}
                for v in self.values
            ],
            "failures": dict(sorted(self.failures.items())),
            "scored": self.scored,
            "total": self.total,
            "manifest": self.manifest,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def render(self) -> str:
        """One human-readable block: metric percentages plus tallies."""
        lines = [f"task: {self.task}  (n={self.total})"]
        for v in self.values:
            if 0.0 <= v.value <= 1.0:
                lines.append(f"  {v.name:<12s} {100 * v.value:6.1f}%")
            else:
                lines.append(f"  {v.name:<12s} {v.value:8.3f}")
        for cause, n in sorted(self.failures.items()):
            lines.append(f"  ! {cause}: {n}")
        return "\n".join(lines)


__all__ = ["MetricValue", "EvalReport"]
