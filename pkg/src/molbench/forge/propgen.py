"""Auxiliary property-regression QA pair generation.

Turns raw (molecule, value) tables into templated question/answer records,
one pair per row. Questions draw from a small paraphrase pool per property
(seeded choice); answers always render the value to two decimals in a
fixed sentence shape, e.g.

    The penalized octanol-water partition coefficient is -7.84.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Sequence

from ..props import PropertyKind
from .records import QaRecord
from .tags import wrap

# Property phrase and target task per supported kind tag.
_PROP_TEXT = {
    "plogP": ("penalized octanol-water partition coefficient", "plogp_reg"),
    "QED": ("QED", "qed_reg"),
    "BBBP": ("BBB permeability", "bbbp_reg"),
    "Mutag": ("mutagenicity", "mutag_reg"),
    "HIA": ("intestinal adsorption", "hia_reg"),
    "logP": ("octanol-water partition coefficient", "lipo_reg"),
    "ESOL": ("logarithmic water solubility", "esol_reg"),
}

DEFAULT_TEMPLATES: tuple[str, ...] = (
    "Please predict the {phrase} of {molecule}.",
    "What is the {phrase} of {molecule}?",
    "Predict the {phrase} of {molecule}.",
    "Given {molecule}, estimate its {phrase}.",
)


def answer_text(phrase: str, value: float) -> str:
    return f"The {phrase} is {value:.2f}."


def gen_property_pairs(
    rows: Iterable[tuple[str, float]],
    prop: PropertyKind,
    templates: Sequence[str] = DEFAULT_TEMPLATES,
    seed: int = 0,
    source: str = "derived",
    split: str = "train",
) -> list[QaRecord]:
    """One regression QA record per (smiles, value) row.

    Rows with non-finite values are rejected. Template choice is drawn from
    a generator seeded once, so the full output stream is reproducible.
    """
    if prop.tag not in _PROP_TEXT:
        raise ValueError(
            f"no question templates for property {prop.tag!r}"
        )
    if not templates:
        raise ValueError("need at least one question template")
    phrase, task = _PROP_TEXT[prop.tag]
    rng = random.Random(f"propgen:{seed}:{prop.tag}")
    out: list[QaRecord] = []
    for smiles, value in rows:
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(
                f"non-finite {prop.tag} value for {smiles!r}: {value}"
            )
        template = rng.choice(list(templates))
        question = template.format(
            phrase=phrase, molecule=wrap("smiles", smiles)
        )
        out.append(
            QaRecord(
                task=task,
                instruction=question,
                output=answer_text(phrase, value),
                meta={"source": source, "split": split},
            )
        )
    return out


__all__ = ["DEFAULT_TEMPLATES", "answer_text", "gen_property_pairs"]
