"""Reference-based text metrics for description tasks.

Conventions, chosen for reproducibility and documented rather than tuned:
case-folded tokens split at whitespace and punctuation boundaries; BLEU is
sentence-level with add-epsilon smoothing on orders above 1 and an exact
zero when no unigram matches; ROUGE reports F1; METEOR uses exact-token
alignment only. Identical non-empty strings short-circuit to 1.0 on every
metric so the top endpoint is exact.
"""

from __future__ import annotations

import math
import re
from collections import Counter

_EPS = 1e-9
_TOKEN_RE = re.compile(r"[a-z0-9]+|[^\sa-z0-9]")

METRIC_NAMES = ("METEOR", "BLEU-2", "BLEU-4", "ROUGE-1", "ROUGE-2", "ROUGE-L")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.casefold())


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(
        tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
    )


def _clipped_matches(pred: list[str], gold: list[str], n: int) -> tuple[int, int]:
    pn = _ngrams(pred, n)
    gn = _ngrams(gold, n)
    match = sum(min(c, gn[g]) for g, c in pn.items())
    return match, sum(pn.values())


def bleu(pred: list[str], gold: list[str], max_n: int) -> float:
    if not pred or not gold:
        return 0.0
    m1, t1 = _clipped_matches(pred, gold, 1)
    if m1 == 0:
        return 0.0
    log_sum = math.log(m1 / t1)
    for n in range(2, max_n + 1):
        m, t = _clipped_matches(pred, gold, n)
        if t == 0:
            p = _EPS
        else:
            p = (m + _EPS) / (t + _EPS)
        log_sum += math.log(p)
    geo = math.exp(log_sum / max_n)
    bp = 1.0 if len(pred) >= len(gold) else math.exp(1 - len(gold) / len(pred))
    return bp * geo


def _f1(match: int, pred_total: int, gold_total: int) -> float:
    if match == 0 or pred_total == 0 or gold_total == 0:
        return 0.0
    p = match / pred_total
    r = match / gold_total
    return 2 * p * r / (p + r)


def rouge_n(pred: list[str], gold: list[str], n: int) -> float:
    m, pt = _clipped_matches(pred, gold, n)
    gt = max(len(gold) - n + 1, 0)
    return _f1(m, pt, gt)


def _lcs_len(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, 1):
            cur.append(
                prev[j - 1] + 1 if x == y else max(prev[j], cur[-1])
            )
        prev = cur
    return prev[-1]


def rouge_l(pred: list[str], gold: list[str]) -> float:
    return _f1(_lcs_len(pred, gold), len(pred), len(gold))


def _meteor_alignment(pred: list[str], gold: list[str]) -> list[tuple[int, int]]:
    # exact matches only: each pred token takes the earliest unused gold slot
    slots: dict[str, list[int]] = {}
    for j, tok in enumerate(gold):
        slots.setdefault(tok, []).append(j)
    used: dict[str, int] = {}
    pairs = []
    for i, tok in enumerate(pred):
        k = used.get(tok, 0)
        if tok in slots and k < len(slots[tok]):
            pairs.append((i, slots[tok][k]))
            used[tok] = k + 1
    return pairs


def meteor(pred: list[str], gold: list[str]) -> float:
    pairs = _meteor_alignment(pred, gold)
    m = len(pairs)
    if m == 0 or not pred or not gold:
        return 0.0
    p = m / len(pred)
    r = m / len(gold)
    f_mean = 10 * p * r / (r + 9 * p)
    chunks = 1
    for (i0, j0), (i1, j1) in zip(pairs, pairs[1:]):
        if i1 != i0 + 1 or j1 != j0 + 1:
            chunks += 1
    penalty = 0.5 * (chunks / m) ** 3
    return f_mean * (1 - penalty)


def text_metrics(pred: str, gold: str) -> dict[str, float]:
    """All six description metrics at once, each in [0, 1]."""
    pt = tokenize(pred)
    gt = tokenize(gold)
    if pt and pt == gt:
        return {name: 1.0 for name in METRIC_NAMES}
    return {
        "METEOR": meteor(pt, gt),
        "BLEU-2": bleu(pt, gt, 2),
        "BLEU-4": bleu(pt, gt, 4),
        "ROUGE-1": rouge_n(pt, gt, 1),
        "ROUGE-2": rouge_n(pt, gt, 2),
        "ROUGE-L": rouge_l(pt, gt),
    }


__all__ = [
    "tokenize",
    "bleu",
    "rouge_n",
    "rouge_l",
    "meteor",
    "text_metrics",
    "METRIC_NAMES",
]
