"""Dataset accounting with category and subcategory rollups.

Counts are kept as raw pair counts; the renderer divides by 1000 and shows
one decimal, matching the usual "#K Pairs" presentation. Rollups are
computed from the same per-task counts they summarize, so they sum to the
grand total exactly by construction and `verify` re-checks that invariant.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .records import QaRecord
from .registry import CATEGORY_ORDER, SUBCATEGORY_ORDER, TASKS, task_info


@dataclass
class DatasetStats:
    per_task: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_task.values())

    def category_rollup(self) -> dict[str, int]:
        out: Counter[str] = Counter()
        for task, n in self.per_task.items():
            out[task_info(task).category] += n
        return dict(out)

    def subcategory_rollup(self) -> dict[tuple[str, str], int]:
        out: Counter[tuple[str, str]] = Counter()
        for task, n in self.per_task.items():
            info = task_info(task)
            out[(info.category, info.subcategory)] += n
        return dict(out)

    def verify(self) -> None:
        total = self.total
        if sum(self.category_rollup().values()) != total:
            raise AssertionError("category rollup does not sum to total")
        if sum(self.subcategory_rollup().values()) != total:
            raise AssertionError("subcategory rollup does not sum to total")

    def to_dict(self) -> dict:
        return {
            "per_task": dict(sorted(self.per_task.items())),
            "categories": dict(sorted(self.category_rollup().items())),
            "subcategories": {
                f"{c}/{s}": n
                for (c, s), n in sorted(self.subcategory_rollup().items())
            },
            "total": self.total,
        }


def compute_stats(dataset: Iterable[QaRecord]) -> DatasetStats:
    counts: Counter[str] = Counter()
    for rec in dataset:
        if rec.task not in TASKS:
            raise KeyError(f"unknown task in dataset: {rec.task!r}")
        counts[rec.task] += 1
    return DatasetStats(per_task=dict(counts))


def _ordered_tasks(stats: DatasetStats) -> list[str]:
    def sort_key(task: str):
        info = task_info(task)
        cat = CATEGORY_ORDER.index(info.category)
        sub = SUBCATEGORY_ORDER.index(info.subcategory)
        registry_pos = list(TASKS).index(task)
        return (cat, sub, registry_pos)

    return sorted(stats.per_task, key=sort_key)


def render_stats_table(stats: DatasetStats, scale_k: bool = True) -> str:
    """Plain-text table: Category | Subcategory | Name | #K Pairs | Source.

    Category and subcategory cells print only on their first row, the way
    grouped tables are usually typeset. scale_k=False prints raw counts
    under a "# Pairs" header instead.
    """
    header = ("Category", "Subcategory", "Name",
              "#K Pairs" if scale_k else "# Pairs", "Source")
    rows: list[tuple[str, str, str, str, str]] = []
    prev_cat = prev_sub = None
    for task in _ordered_tasks(stats):
        info = task_info(task)
        count = stats.per_task[task]
        shown = f"{count / 1000:.1f}" if scale_k else str(count)
        cat = info.category if info.category != prev_cat else ""
        sub = (
            info.subcategory
            if (info.category, info.subcategory) != (prev_cat, prev_sub)
            else ""
        )
        rows.append((cat, sub, info.display, shown, info.source))
        prev_cat, prev_sub = info.category, info.subcategory
    total = stats.total
    total_shown = f"{total / 1000:.1f}" if scale_k else str(total)
    rows.append(("", "", "Total", total_shown, ""))

    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(5)
    ]

    def fmt(row) -> str:
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()

    rule = "-" * (sum(widths) + 8)
    lines = [fmt(header), rule]
    lines.extend(fmt(r) for r in rows[:-1])
    lines.append(rule)
    lines.append(fmt(rows[-1]))
    return "\n".join(lines)


__all__ = ["DatasetStats", "compute_stats", "render_stats_table"]
