"""Weighted thought/answer training loss.

The objective rebalances per-token cross-entropy between the reasoning and
answer segments:

    loss = alpha * mean(thought) + (1 - alpha) * mean(answer)

A sample without a reasoning segment contributes only its answer loss
(alpha is irrelevant there); a sample without answer tokens is an error,
because the answer segment is what training is supposed to supervise.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from typing import Sequence

from .errors import EmptyAnswer


@dataclass(frozen=True)
class LossWeights:
    alpha: float = 0.1

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")


def weighted_loss(
    thought_token_losses: Sequence[float],
    answer_token_losses: Sequence[float],
    w: LossWeights = LossWeights(),
) -> float:
    if not answer_token_losses:
        raise EmptyAnswer("no answer tokens to average")
    answer_mean = fmean(answer_token_losses)
    if not thought_token_losses:
        return answer_mean
    thought_mean = fmean(thought_token_losses)
    return w.alpha * thought_mean + (1.0 - w.alpha) * answer_mean


__all__ = ["LossWeights", "weighted_loss"]
