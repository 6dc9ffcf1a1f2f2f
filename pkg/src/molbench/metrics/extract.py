"""Answer-payload extraction from model output text.

Payloads are located on a copy of the text whose think blocks are blanked
out (offsets preserved), so reported spans always index the original string.
Tagged spans win; untagged fallbacks follow documented heuristics.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from ..chem import is_valid_smiles
from ..chem.formula import parse_formula
from .errors import NoAnswerFound

THINK_RE = re.compile(r"<think>.*?</think>", re.DOTALL)
_TAGS = {
    "smiles": re.compile(r"<SMILES>(.*?)</SMILES>", re.DOTALL),
    "formula": re.compile(r"<MOLFORMULA>(.*?)</MOLFORMULA>", re.DOTALL),
    "iupac": re.compile(r"<IUPAC>(.*?)</IUPAC>", re.DOTALL),
}
_NUMBER_RE = re.compile(r"[-+]?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?")
_YESNO_RE = re.compile(r"\b(yes|no)\b", re.IGNORECASE)
_TOKEN_RE = re.compile(r"\S+")
_FORMULA_SHAPE = re.compile(r"^(?:[A-Z][a-z]?\d*)+$")

KINDS = ("smiles", "formula", "iupac", "number", "yes_no", "free_text")


@dataclass(frozen=True)
class ExtractedAnswer:
    kind: str
    payload: str | float
    source_span: tuple[int, int]

    def __post_init__(self):
        if self.kind == "number" and not math.isfinite(float(self.payload)):
            raise ValueError("numeric payloads must be finite")


def _blank_think(text: str) -> str:
    # keep offsets stable: replace think regions with spaces
    return THINK_RE.sub(lambda m: " " * (m.end() - m.start()), text)


def _tagged(masked: str, kind: str) -> tuple[str, tuple[int, int]] | None:
    m = _TAGS[kind].search(masked)
    if not m:
        return None
    payload = m.group(1).strip()
    start = m.start(1) + m.group(1).index(payload) if payload else m.start(1)
    return payload, (start, start + len(payload))


def _strip_token(tok: str, start: int) -> tuple[str, int]:
    left = tok.lstrip("\"'([{.,;:!?")
    start += len(tok) - len(left)
    right = left.rstrip("\"')]}.,;:!?")
    return right, start


def extract_answer(text: str, kind: str) -> ExtractedAnswer:
    """Locate the answer payload of the given kind in model text.

    Think blocks never contribute; a tag of the matching kind is preferred
    and fallbacks are deterministic: longest parseable token for SMILES,
    first parseable multi-part token for formulas, first signed decimal for
    numbers, first yes/no word for labels, whole text for IUPAC/free text.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown answer kind: {kind!r}")
    masked = _blank_think(text)

    if kind in _TAGS:
        hit = _tagged(masked, kind)
        if hit is not None:
            payload, span = hit
            if payload:
                return ExtractedAnswer(kind, payload, span)

    if kind == "smiles":
        best: tuple[str, int] | None = None
        for m in _TOKEN_RE.finditer(masked):
            tok, start = _strip_token(m.group(), m.start())
            if "<" in tok or not tok:
                continue
            if is_valid_smiles(tok):
                if best is None or len(tok) > len(best[0]):
                    best = (tok, start)
        if best is None:
            raise NoAnswerFound("no parseable SMILES in answer text")
        return ExtractedAnswer(kind, best[0], (best[1], best[1] + len(best[0])))

    if kind == "formula":
        for m in _TOKEN_RE.finditer(masked):
            tok, start = _strip_token(m.group(), m.start())
            if not tok or not _FORMULA_SHAPE.match(tok):
                continue
            # one bare element symbol is too ambiguous to accept untagged
            if not re.search(r"\d", tok) and not re.search(
                r"[A-Z].*[A-Z]", tok
            ):
                continue
            try:
                parse_formula(tok)
            except ValueError:
                continue
            return ExtractedAnswer(kind, tok, (start, start + len(tok)))
        raise NoAnswerFound("no molecular formula in answer text")

    if kind == "iupac":
        payload = masked.strip()
        if not payload:
            raise NoAnswerFound("empty answer text")
        start = len(masked) - len(masked.lstrip())
        return ExtractedAnswer(kind, payload, (start, start + len(payload)))

    if kind == "number":
        m = _NUMBER_RE.search(masked)
        if not m:
            raise NoAnswerFound("no numeric value in answer text")
        return ExtractedAnswer(kind, float(m.group()), m.span())

    if kind == "yes_no":
        m = _YESNO_RE.search(masked)
        if not m:
            raise NoAnswerFound("no yes/no label in answer text")
        return ExtractedAnswer(kind, m.group(1).lower(), m.span())

    payload = masked.strip()
    if not payload:
        raise NoAnswerFound("empty answer text")
    start = len(masked) - len(masked.lstrip())
    return ExtractedAnswer("free_text", payload, (start, start + len(payload)))


__all__ = ["ExtractedAnswer", "extract_answer", "KINDS", "THINK_RE"]
