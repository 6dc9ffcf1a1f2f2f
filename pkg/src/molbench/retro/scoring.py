"""Set-wise exact match and depth pruning."""

from __future__ import annotations

from .routes import PrecursorSet


def setwise_em(pred: PrecursorSet,
               gold_routes: list[PrecursorSet]) -> bool:
    """True iff the predicted set equals any gold starting-material set.

    Equality is canonical-set equality, so member order and SMILES
    renderings never matter. Supersets and subsets of a gold set fail.
    """
    if not gold_routes:
        raise ValueError("need at least one gold route")
    return any(pred.members == gold.members for gold in gold_routes)


def depth_prune(predicted_depth: int, gold_depth: int) -> bool:
    """True iff the prediction must be pruned: its depth exceeds gold's."""
    if predicted_depth < 1 or gold_depth < 1:
        raise ValueError("depths must be >= 1")
    return predicted_depth > gold_depth


__all__ = ["setwise_em", "depth_prune"]
