"""Molecule- and label-level comparison metrics."""

from __future__ import annotations

import math

from ..chem import (
    ChemError,
    canonical_smiles,
    is_valid_smiles,
    morgan_fingerprint,
    parse_smiles,
    tanimoto,
)
from ..chem.formula import parse_formula
from ..chem.mol import Molecule
from ..props import OracleRegistry, compare_property
from .errors import EmptyInput, GoldInvalid


def em_smiles(pred: str, gold: str, stereo_strict: bool = True) -> bool:
    """Exact match on canonical structure.

    stereo_strict=False erases stereo descriptors on both sides first, for
    benchmarks that treat stereoisomers as the same answer.
    """
    try:
        g = canonical_smiles(gold, stereo=stereo_strict)
    except ChemError as exc:
        raise GoldInvalid(f"gold SMILES does not parse: {gold!r}") from exc
    try:
        p = canonical_smiles(pred, stereo=stereo_strict)
    except ChemError:
        return False
    return p == g


def em_formula(pred: str, gold: str) -> bool:
    """Element-multiset equality, written order ignored."""
    try:
        g = parse_formula(gold)
    except ValueError as exc:
        raise GoldInvalid(f"gold formula does not parse: {gold!r}") from exc
    try:
        p = parse_formula(pred)
    except ValueError:
        return False
    return p.as_dict() == g.as_dict()


def _iupac_parts(text: str) -> frozenset[str]:
    parts = []
    for raw in text.split(";"):
        norm = " ".join(raw.split()).casefold()
        if norm:
            parts.append(norm)
    return frozenset(parts)


def em_iupac(pred: str, gold: str) -> bool:
    """Set equality over semicolon-separated name parts, whitespace and case
    normalized."""
    return _iupac_parts(pred) == _iupac_parts(gold)


def fts(pred: str, gold: str, radius: int = 2, size: int = 2048) -> float:
    """Fingerprint Tanimoto similarity; an unparseable prediction scores 0."""
    try:
        g = parse_smiles(gold)
    except ChemError as exc:
        raise GoldInvalid(f"gold SMILES does not parse: {gold!r}") from exc
    try:
        p = parse_smiles(pred)
    except ChemError:
        return 0.0
    return tanimoto(
        morgan_fingerprint(p, radius, size), morgan_fingerprint(g, radius, size)
    )


def validity_rate(preds: list[str]) -> float:
    if not preds:
        raise EmptyInput("validity_rate needs at least one prediction")
    return sum(1 for p in preds if is_valid_smiles(p)) / len(preds)


def regression_rmse(pairs: list[tuple[float, float]]) -> float:
    if not pairs:
        raise EmptyInput("regression_rmse needs at least one pair")
    return math.sqrt(
        sum((p - g) ** 2 for p, g in pairs) / len(pairs)
    )


def classification_accuracy(
    pairs: list[tuple[str | None, str]],
) -> float:
    """Label match rate; an unextractable prediction (None) counts as wrong."""
    if not pairs:
        raise EmptyInput("classification_accuracy needs at least one pair")
    hits = sum(
        1
        for p, g in pairs
        if p is not None and p.casefold() == g.casefold()
    )
    return hits / len(pairs)


def multi_opt_success(
    instr: list[tuple[object, str]],
    source: Molecule,
    candidates: list[str],
    oracles: OracleRegistry | None = None,
) -> bool:
    """True iff some candidate improves every requested property.

    instr rows are (property kind, "increase"|"decrease"); each candidate
    must satisfy all of them jointly, so improving a subset never counts.
    """
    if not candidates:
        raise EmptyInput("multi_opt_success needs at least one candidate")
    for cand in candidates:
        try:
            mol = parse_smiles(cand)
        except ChemError:
            continue
        if all(
            compare_property(source, mol, kind, want, oracles)
            for kind, want in instr
        ):
            return True
    return False


__all__ = [
    "em_smiles",
    "em_formula",
    "em_iupac",
    "fts",
    "validity_rate",
    "regression_rmse",
    "classification_accuracy",
    "multi_opt_success",
]
