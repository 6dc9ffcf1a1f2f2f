"""Reciprocal-rank aggregation of beam results across augmented inputs.

Each augmented input contributes a rank-ordered candidate list (rank 1
first). A candidate's score is the sum of 1/rank over every list it
appears in; candidates are unified by canonical-set identity first, so
the same starting materials written differently pool their score.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .routes import PrecursorSet


@dataclass(frozen=True)
class RankedCandidate:
    candidate: PrecursorSet
    score: float


def _coerce(entry: PrecursorSet | Iterable[str],
            stereo: bool) -> PrecursorSet:
    if isinstance(entry, PrecursorSet):
        return entry
    return PrecursorSet.from_smiles(entry, stereo=stereo)


def aggregate_beams(
    results: Sequence[Sequence[PrecursorSet | Iterable[str]]],
    stereo: bool = True,
) -> list[RankedCandidate]:
    """Merge per-augmentation beams into one ranked candidate table.

    Sort order: score descending, then lexicographic canonical rendering,
    so equal-score candidates always come out in the same order.
    """
    scores: dict[PrecursorSet, float] = {}
    for beam in results:
        for rank, entry in enumerate(beam, start=1):
            candidate = _coerce(entry, stereo)
            scores[candidate] = scores.get(candidate, 0.0) + 1.0 / rank
    ranked = sorted(
        scores.items(), key=lambda kv: (-kv[1], kv[0].rendering())
    )
    return [RankedCandidate(candidate=c, score=s) for c, s in ranked]


__all__ = ["RankedCandidate", "aggregate_beams"]
