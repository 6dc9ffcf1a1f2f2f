"""Two-dimensional test-time scaling: augment inputs, aggregate beams.

The target molecule is rendered k_a different ways; each rendering is
decoded with a beam of width k_b by the supplied generate function; the
per-rendering ranked candidates are pooled with reciprocal-rank scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .aggregate import RankedCandidate, aggregate_beams
from .augment import augment_smiles


@dataclass(frozen=True)
class TtsConfig:
    k_a: int = 6  # augmented input renderings
    k_b: int = 2  # beam width per rendering
    seed: int = 0

    def __post_init__(self):
        if self.k_a < 1 or self.k_b < 1:
            raise ValueError("k_a and k_b must be >= 1")


GenerateFn = Callable[[str, int], Sequence[Iterable[str]]]
"""(target rendering, beam width) -> ranked candidate lists, rank 1 first.

Each candidate is an iterable of precursor SMILES strings.
"""


def scale_inference(
    target_smiles: str,
    generate: GenerateFn,
    cfg: TtsConfig = TtsConfig(),
    stereo: bool = True,
) -> list[RankedCandidate]:
    variants = augment_smiles(
        target_smiles, cfg.k_a, seed=cfg.seed, stereo=stereo
    )
    beams = [generate(text, cfg.k_b) for text in variants.texts]
    return aggregate_beams(beams, stereo=stereo)


__all__ = ["TtsConfig", "GenerateFn", "scale_inference"]
