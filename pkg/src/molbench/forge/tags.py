"""Span tagging for molecular sublanguages inside natural-language text.

Three span kinds are recognized, each with its own enclosing tag pair:

    smiles   <SMILES>...</SMILES>
    iupac    <IUPAC>...</IUPAC>
    formula  <MOLFORMULA>...</MOLFORMULA>

Tagging is idempotent: a span already wrapped in its tags (or annotated
including them) is left alone, so re-running the pipeline over partially
tagged corpora is safe. strip_molecular_tags removes every tag pair and is
the exact inverse of tagging untagged text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import OverlappingSpans

TAG_PAIRS = {
    "smiles": ("<SMILES>", "</SMILES>"),
    "iupac": ("<IUPAC>", "</IUPAC>"),
    "formula": ("<MOLFORMULA>", "</MOLFORMULA>"),
}

_ANY_TAG_RE = re.compile(r"</?(?:SMILES|IUPAC|MOLFORMULA)>")


@dataclass(frozen=True)
class SpanAnnotation:
    kind: str
    start: int
    end: int

    def __post_init__(self):
        if self.kind not in TAG_PAIRS:
            raise ValueError(f"unknown span kind {self.kind!r}")
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad span range [{self.start}, {self.end})")


def _already_tagged(text: str, span: SpanAnnotation) -> bool:
    open_tag, close_tag = TAG_PAIRS[span.kind]
    body = text[span.start:span.end]
    if body.startswith(open_tag) and body.endswith(close_tag):
        return True
    return (
        text[max(0, span.start - len(open_tag)):span.start] == open_tag
        and text[span.end:span.end + len(close_tag)] == close_tag
    )


def tag_molecular_spans(text: str, spans: list[SpanAnnotation]) -> str:
    """Wrap each annotated span in its kind's tag pair."""
    for span in spans:
        if span.end > len(text):
            raise ValueError(
                f"span [{span.start}, {span.end}) beyond text length "
                f"{len(text)}"
            )
    ordered = sorted(spans, key=lambda s: (s.start, s.end))
    for prev, cur in zip(ordered, ordered[1:]):
        if cur.start < prev.end:
            raise OverlappingSpans(
                f"[{prev.start}, {prev.end}) overlaps [{cur.start}, {cur.end})"
            )
    # Rewrite right to left so earlier offsets stay valid.
    out = text
    for span in reversed(ordered):
        if _already_tagged(out, span):
            continue
        open_tag, close_tag = TAG_PAIRS[span.kind]
        out = (out[:span.start] + open_tag + out[span.start:span.end]
               + close_tag + out[span.end:])
    return out


def strip_molecular_tags(text: str) -> str:
    """Remove every molecular tag, leaving span bodies in place."""
    return _ANY_TAG_RE.sub("", text)


def wrap(kind: str, body: str) -> str:
    """Convenience for building tagged text directly."""
    open_tag, close_tag = TAG_PAIRS[kind]
    return f"{open_tag}{body}{close_tag}"


__all__ = [
    "TAG_PAIRS",
    "SpanAnnotation",
    "tag_molecular_spans",
    "strip_molecular_tags",
    "wrap",
]
