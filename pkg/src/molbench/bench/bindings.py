"""Metric bindings: turn model texts plus gold records into an outcome.

Accounting rules shared by every binding: an instance the model answered
badly (no extractable answer, invalid molecule, wrong value) is scored and
contributes zero, because that is a model failure. An instance the harness
cannot judge (oracle table has no value for a generated molecule) is tallied
under failures and excluded from metric denominators. Broken fixtures, bad
meta, and unbound oracles raise instead of being absorbed into scores.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..chem import ChemError, is_valid_smiles, parse_smiles
from ..forge.records import QaRecord
from ..groups import EditInstruction, group_of, verify_edit
from ..metrics import (
    GoldInvalid,
    MetricValue,
    NoAnswerFound,
    classification_accuracy,
    em_formula,
    em_iupac,
    em_smiles,
    extract_answer,
    fts,
    regression_rmse,
    text_metrics,
)
from ..metrics.match import multi_opt_success
from ..metrics.text import METRIC_NAMES
from ..props import OracleMiss, OracleRegistry, compare_property
from .errors import ConfigError

ORACLE_MISS = "oracle_miss"
NO_NUMERIC_ANSWER = "no_numeric_answer"

# canonical ordering for multi-objective subtask columns
SUBTASK_ORDER = ("BPQ", "MPQ", "BHMQ", "BMPQ", "HMPQ")


@dataclass
class ScoreContext:
    oracles: OracleRegistry | None = None
    stereo_strict: bool = True


@dataclass
class ScoreOutcome:
    """What a binding produced for the instances it was handed."""

    values: list[MetricValue] = field(default_factory=list)
    scored: int = 0
    failures: dict[str, int] = field(default_factory=dict)

    def fail(self, cause: str) -> None:
        self.failures[cause] = self.failures.get(cause, 0) + 1


Scorer = Callable[
    [str, list[QaRecord], list[list[str]], ScoreContext], ScoreOutcome
]


def _gold(record: QaRecord, kind: str, task: str) -> str | float:
    try:
        return extract_answer(record.output, kind).payload
    except NoAnswerFound as exc:
        raise GoldInvalid(
            f"{task}: gold output has no {kind} answer: {record.output!r}"
        ) from exc


def _pred(text: str, kind: str) -> str | float | None:
    try:
        return extract_answer(text, kind).payload
    except NoAnswerFound:
        return None


def _meta(record: QaRecord, key: str, task: str):
    if key not in record.meta:
        raise ConfigError(f"{task}: record meta lacks {key!r}")
    return record.meta[key]


def _source_mol(record: QaRecord, task: str):
    smi = _meta(record, "source_smiles", task)
    try:
        return parse_smiles(smi)
    except ChemError as exc:
        raise ConfigError(f"{task}: bad source_smiles {smi!r}") from exc


def _mean_flags(flags: list[bool]) -> float:
    return sum(1 for f in flags if f) / len(flags)


def _em_scorer(extract_kind: str, compare) -> Scorer:
    def score(task, records, texts, ctx) -> ScoreOutcome:
        out = ScoreOutcome(scored=len(records))
        if not records:
            return out
        hits = []
        for rec, answer_texts in zip(records, texts):
            gold = str(_gold(rec, extract_kind, task))
            pred = _pred(answer_texts[0], extract_kind)
            hits.append(pred is not None and compare(str(pred), gold, ctx))
        out.values.append(MetricValue("EM", _mean_flags(hits), len(hits)))
        return out

    return score


score_em_smiles = _em_scorer(
    "smiles", lambda p, g, ctx: em_smiles(p, g, ctx.stereo_strict)
)
score_em_formula = _em_scorer("formula", lambda p, g, ctx: em_formula(p, g))
score_em_iupac = _em_scorer("iupac", lambda p, g, ctx: em_iupac(p, g))


def score_caption(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome(scored=len(records))
    if not records:
        return out
    sums = {name: 0.0 for name in METRIC_NAMES}
    for rec, answer_texts in zip(records, texts):
        gold = str(_gold(rec, "free_text", task))
        pred = _pred(answer_texts[0], "free_text")
        scores = text_metrics(str(pred) if pred is not None else "", gold)
        for name in METRIC_NAMES:
            sums[name] += scores[name]
    n = len(records)
    out.values = [MetricValue(name, sums[name] / n, n) for name in METRIC_NAMES]
    return out


def score_classification(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome(scored=len(records))
    if not records:
        return out
    pairs = []
    for rec, answer_texts in zip(records, texts):
        gold = str(_gold(rec, "yes_no", task))
        pred = _pred(answer_texts[0], "yes_no")
        pairs.append((str(pred) if pred is not None else None, gold))
    out.values.append(
        MetricValue("Acc", classification_accuracy(pairs), len(pairs))
    )
    return out


def score_regression(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome()
    pairs = []
    for rec, answer_texts in zip(records, texts):
        gold = float(_gold(rec, "number", task))
        pred = _pred(answer_texts[0], "number")
        if pred is None:
            out.fail(NO_NUMERIC_ANSWER)
            continue
        pairs.append((float(pred), gold))
    out.scored = len(pairs)
    if pairs:
        out.values.append(
            MetricValue("RMSE", regression_rmse(pairs), len(pairs))
        )
    return out


def _reaction_scorer(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome(scored=len(records))
    if not records:
        return out
    em_hits, fts_sum, valid_hits = [], 0.0, []
    for rec, answer_texts in zip(records, texts):
        gold = str(_gold(rec, "smiles", task))
        pred = _pred(answer_texts[0], "smiles")
        if pred is None:
            em_hits.append(False)
            valid_hits.append(False)
            continue
        pred = str(pred)
        em_hits.append(em_smiles(pred, gold, ctx.stereo_strict))
        fts_sum += fts(pred, gold)
        valid_hits.append(is_valid_smiles(pred))
    n = len(records)
    out.values = [
        MetricValue("EM", _mean_flags(em_hits), n),
        MetricValue("FTS", fts_sum / n, n),
        MetricValue("Validity", _mean_flags(valid_hits), n),
    ]
    return out


score_reaction = _reaction_scorer
score_generation = _reaction_scorer


def _edit_instruction(rec: QaRecord, task: str) -> EditInstruction:
    kind = str(_meta(rec, "edit_kind", task))
    replacement = rec.meta.get("replacement")
    try:
        return EditInstruction(
            kind=kind,
            group=group_of(str(_meta(rec, "group", task))),
            source=_source_mol(rec, task),
            replacement=(
                group_of(str(replacement)) if replacement is not None else None
            ),
        )
    except ValueError as exc:
        raise ConfigError(f"{task}: bad edit meta: {exc}") from exc


def score_edit(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome(scored=len(records))
    if not records:
        return out
    hits = []
    for rec, answer_texts in zip(records, texts):
        instr = _edit_instruction(rec, task)
        pred = _pred(answer_texts[0], "smiles")
        if pred is None:
            hits.append(False)
            continue
        hits.append(verify_edit(instr, str(pred)).success)
    out.values.append(MetricValue("SR", _mean_flags(hits), len(hits)))
    return out


def score_opt_single(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome()
    hits = []
    for rec, answer_texts in zip(records, texts):
        kind = str(_meta(rec, "property", task))
        want = str(_meta(rec, "direction", task))
        source = _source_mol(rec, task)
        pred = _pred(answer_texts[0], "smiles")
        if pred is None:
            hits.append(False)
            continue
        try:
            mol = parse_smiles(str(pred))
        except ChemError:
            hits.append(False)
            continue
        try:
            hits.append(compare_property(source, mol, kind, want, ctx.oracles))
        except OracleMiss:
            out.fail(ORACLE_MISS)
    out.scored = len(hits)
    if hits:
        out.values.append(MetricValue("SR", _mean_flags(hits), len(hits)))
    return out


def _objectives(rec: QaRecord, task: str) -> list[tuple[str, str]]:
    raw = _meta(rec, "objectives", task)
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"{task}: objectives must be a non-empty list")
    instr = []
    for obj in raw:
        if not isinstance(obj, dict):
            raise ConfigError(f"{task}: objective must be a mapping")
        instr.append(
            (str(_pluck(obj, "property", task)), str(_pluck(obj, "direction", task)))
        )
    return instr


def _pluck(obj: dict, key: str, task: str):
    if key not in obj:
        raise ConfigError(f"{task}: objective lacks {key!r}")
    return obj[key]


def score_opt_multi(task, records, texts, ctx) -> ScoreOutcome:
    out = ScoreOutcome()
    overall: list[bool] = []
    by_subtask: dict[str, list[bool]] = {}
    for rec, answer_texts in zip(records, texts):
        instr = _objectives(rec, task)
        source = _source_mol(rec, task)
        candidates = []
        for text in answer_texts:
            pred = _pred(text, "smiles")
            if pred is not None:
                candidates.append(str(pred))
        if not candidates:
            hit = False
        else:
            try:
                hit = multi_opt_success(instr, source, candidates, ctx.oracles)
            except OracleMiss:
                out.fail(ORACLE_MISS)
                continue
        overall.append(hit)
        sub = rec.meta.get("subtask")
        if sub is not None:
            by_subtask.setdefault(str(sub), []).append(hit)
    out.scored = len(overall)
    if overall:
        out.values.append(MetricValue("SR", _mean_flags(overall), len(overall)))
    order = {name: i for i, name in enumerate(SUBTASK_ORDER)}
    for sub in sorted(by_subtask, key=lambda s: (order.get(s, len(order)), s)):
        hits = by_subtask[sub]
        out.values.append(
            MetricValue(f"SR/{sub}", _mean_flags(hits), len(hits))
        )
    return out


BINDINGS: dict[str, Scorer] = {
    "em_smiles": score_em_smiles,
    "em_formula": score_em_formula,
    "em_iupac": score_em_iupac,
    "caption": score_caption,
    "classification": score_classification,
    "regression": score_regression,
    "reaction_suite": score_reaction,
    "generation_suite": score_generation,
    "edit_sr": score_edit,
    "opt_single_sr": score_opt_single,
    "opt_multi_sr": score_opt_multi,
}


__all__ = [
    "BINDINGS",
    "ScoreContext",
    "ScoreOutcome",
    "Scorer",
    "ORACLE_MISS",
    "NO_NUMERIC_ANSWER",
    "SUBTASK_ORDER",
]
