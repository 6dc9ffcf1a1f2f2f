"""Hierarchical verifiable reward: format, then validity, then accuracy.

Components gate strictly: a later component is evaluated only when every
earlier one passed, and the total is the sum of the weights that fired,
so boolean outcomes can only produce totals in {0, 0.5, 1.0, 2.0}.

Accepted answer grammar (after the mandatory leading think block, with
molecular tags stripped):

    flat list       starting materials joined by "." on one line, or one
                    molecule per line
    stepwise plan   one reaction per line, "product >> prec.prec...",
                    read top-down from the target

For a plan, the predicted starting materials are all precursors that are
never themselves expanded as a product (canonical identity).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..chem import ChemError, canonical_smiles
from ..common import THINK_CLOSE, THINK_OPEN
from ..forge.tags import strip_molecular_tags
from .routes import PrecursorSet
from .scoring import setwise_em


@dataclass(frozen=True)
class RewardConfig:
    w_fmt: float = 0.5
    w_valid: float = 0.5
    w_acc: float = 1.0

    def __post_init__(self):
        if min(self.w_fmt, self.w_valid, self.w_acc) < 0:
            raise ValueError("reward weights must be non-negative")


@dataclass(frozen=True)
class RewardBreakdown:
    fmt_ok: bool
    valid_ok: bool
    acc_ok: bool
    total: float

    def __post_init__(self):
        if self.valid_ok and not self.fmt_ok:
            raise ValueError("validity cannot pass without format")
        if self.acc_ok and not self.valid_ok:
            raise ValueError("accuracy cannot pass without validity")


@dataclass(frozen=True)
class ParsedAnswer:
    kind: str  # "flat" | "plan"
    molecules: tuple[str, ...]  # every molecular string, raw
    steps: tuple[tuple[str, tuple[str, ...]], ...]  # plans only


def _split_think(sample: str) -> str | None:
    """The answer text after one well-formed leading think block."""
    if not sample.startswith(THINK_OPEN):
        return None
    if sample.count(THINK_OPEN) != 1 or sample.count(THINK_CLOSE) != 1:
        return None
    end = sample.find(THINK_CLOSE)
    return sample[end + len(THINK_CLOSE):]


def _token_ok(token: str) -> bool:
    return bool(token) and not any(c.isspace() for c in token)


def parse_answer(answer: str) -> ParsedAnswer | None:
    """Structural parse of the answer grammar; None when uninterpretable."""
    text = strip_molecular_tags(answer).strip()
    if not text:
        return None
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if any(">>" in ln for ln in lines):
        steps = []
        molecules: list[str] = []
        for ln in lines:
            sides = ln.split(">>")
            if len(sides) != 2:
                return None
            product = sides[0].strip()
            precursors = tuple(
                p.strip() for p in sides[1].split(".") if p.strip()
            )
            if not _token_ok(product) or not precursors:
                return None
            if not all(_token_ok(p) for p in precursors):
                return None
            steps.append((product, precursors))
            molecules.append(product)
            molecules.extend(precursors)
        return ParsedAnswer("plan", tuple(molecules), tuple(steps))
    molecules = []
    for ln in lines:
        for token in ln.split("."):
            token = token.strip()
            if not _token_ok(token):
                return None
            molecules.append(token)
    if not molecules:
        return None
    return ParsedAnswer("flat", tuple(molecules), ())


def predicted_leaves(parsed: ParsedAnswer,
                     stereo: bool = True) -> PrecursorSet:
    """Starting materials of an answer whose molecules all parse."""
    if parsed.kind == "flat":
        return PrecursorSet.from_smiles(parsed.molecules, stereo=stereo)
    products = {
        canonical_smiles(product, stereo=stereo)
        for product, _ in parsed.steps
    }
    leaves = []
    for _, precursors in parsed.steps:
        for p in precursors:
            canon = canonical_smiles(p, stereo=stereo)
            if canon not in products:
                leaves.append(canon)
    return PrecursorSet.from_smiles(leaves, stereo=stereo)


def score_reward(
    sample: str,
    gold_routes: list[PrecursorSet],
    cfg: RewardConfig = RewardConfig(),
    stereo: bool = True,
) -> RewardBreakdown:
    """Grade one raw model sample against the gold starting-material sets."""
    answer = _split_think(sample)
    parsed = parse_answer(answer) if answer is not None else None
    if parsed is None:
        return RewardBreakdown(False, False, False, 0.0)

    valid = True
    for mol in parsed.molecules:
        try:
            canonical_smiles(mol, stereo=stereo)
        except ChemError:
            valid = False
            break
    if not valid:
        return RewardBreakdown(True, False, False, cfg.w_fmt)

    try:
        leaves = predicted_leaves(parsed, stereo=stereo)
    except ValueError:
        # A plan whose precursors are all re-expanded has no leaves.
        return RewardBreakdown(True, True, False, cfg.w_fmt + cfg.w_valid)
    acc = setwise_em(leaves, gold_routes)
    total = cfg.w_fmt + cfg.w_valid + (cfg.w_acc if acc else 0.0)
    return RewardBreakdown(True, True, acc, total)


__all__ = [
    "RewardConfig",
    "RewardBreakdown",
    "ParsedAnswer",
    "parse_answer",
    "predicted_leaves",
    "score_reward",
]
