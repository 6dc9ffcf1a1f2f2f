"""Retrosynthesis verification: routes, rewards, augmentation, aggregation."""

from .aggregate import RankedCandidate, aggregate_beams
from .augment import (
    RouteRendering,
    SmilesVariants,
    augment_route,
    augment_smiles,
    variants_canonical_equal,
)
from .errors import EmptyAnswer, InsufficientVariants, RetroError, RouteFormatError
from .loss import LossWeights, weighted_loss
from .reward import (
    ParsedAnswer,
    RewardBreakdown,
    RewardConfig,
    parse_answer,
    predicted_leaves,
    score_reward,
)
from .routes import (
    PrecursorSet,
    RouteRecord,
    RouteTree,
    read_route_records,
    route_record_from_dict,
)
from .scoring import depth_prune, setwise_em
from .tts import GenerateFn, TtsConfig, scale_inference

__all__ = [
    "RetroError",
    "RouteFormatError",
    "EmptyAnswer",
    "InsufficientVariants",
    "PrecursorSet",
    "RouteTree",
    "RouteRecord",
    "route_record_from_dict",
    "read_route_records",
    "setwise_em",
    "depth_prune",
    "RewardConfig",
    "RewardBreakdown",
    "ParsedAnswer",
    "parse_answer",
    "predicted_leaves",
    "score_reward",
    "SmilesVariants",
    "augment_smiles",
    "RouteRendering",
    "augment_route",
    "variants_canonical_equal",
    "RankedCandidate",
    "aggregate_beams",
    "LossWeights",
    "weighted_loss",
    "TtsConfig",
    "GenerateFn",
    "scale_inference",
]
