"""Seeded multi-task mixture sampling.

Each task source is sampled independently, without replacement, using a
generator seeded from (mixture seed, task name). That makes every task's
sample stable under edits to the rest of the spec, and the merged stream
deterministic: records are emitted ordered by (task, position in source).

Byte-identical replay under a fixed (spec, seed) is the contract the
run manifest's content hash checks.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import SourceMissing
from .records import QaRecord, read_records, record_to_json


@dataclass(frozen=True)
class TaskSource:
    task: str
    path: Path
    cap: int | None = None  # None takes the whole source

    def __post_init__(self):
        if self.cap is not None and self.cap < 0:
            raise ValueError(f"{self.task}: negative cap {self.cap}")


@dataclass(frozen=True)
class MixtureSpec:
    sources: tuple[TaskSource, ...]
    seed: int

    def __post_init__(self):
        names = [s.task for s in self.sources]
        if len(names) != len(set(names)):
            raise ValueError("duplicate task in mixture spec")


def _sampled_indices(n: int, cap: int | None, seed: int, task: str) -> list[int]:
    take = n if cap is None else min(cap, n)
    rng = random.Random(f"mixture:{seed}:{task}")
    picked = rng.sample(range(n), take)
    picked.sort()
    return picked


def sample_mixture(
    spec: MixtureSpec,
) -> tuple[Iterator[QaRecord], dict]:
    """Sample every source; returns (record stream, manifest).

    The manifest reports, per task, the source size, requested cap, and
    sampled count, plus the totals. The stream is ordered by task name and
    then by each record's position in its source file.
    """
    plans: list[tuple[TaskSource, list[QaRecord], list[int]]] = []
    manifest_tasks: dict[str, dict] = {}
    for source in sorted(spec.sources, key=lambda s: s.task):
        if not Path(source.path).exists():
            raise SourceMissing(f"{source.task}: no such file {source.path}")
        records = list(read_records(source.path))
        picked = _sampled_indices(
            len(records), source.cap, spec.seed, source.task
        )
        plans.append((source, records, picked))
        manifest_tasks[source.task] = {
            "path": str(source.path),
            "source_size": len(records),
            "cap": source.cap,
            "sampled": len(picked),
        }
    manifest = {
        "seed": spec.seed,
        "tasks": manifest_tasks,
        "total": sum(t["sampled"] for t in manifest_tasks.values()),
    }

    def stream() -> Iterator[QaRecord]:
        for _, records, picked in plans:
            for i in picked:
                yield records[i]

    return stream(), manifest


def write_mixture(spec: MixtureSpec, out_path: Path | str) -> dict:
    """Materialize the sampled stream; adds a content hash to the manifest."""
    stream, manifest = sample_mixture(spec)
    digest = hashlib.sha256()
    n = 0
    with open(out_path, "w", encoding="utf-8") as fh:
        for rec in stream:
            line = record_to_json(rec) + "\n"
            fh.write(line)
            digest.update(line.encode("utf-8"))
            n += 1
    manifest["written"] = n
    manifest["sha256"] = digest.hexdigest()
    return manifest


__all__ = ["TaskSource", "MixtureSpec", "sample_mixture", "write_mixture"]
