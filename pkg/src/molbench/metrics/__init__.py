"""Benchmark metrics: extraction, molecule matching, text scoring, reports."""

from .errors import EmptyInput, GoldInvalid, MetricError, NoAnswerFound
from .extract import KINDS, ExtractedAnswer, extract_answer
from .match import (
    classification_accuracy,
    em_formula,
    em_iupac,
    em_smiles,
    fts,
    multi_opt_success,
    regression_rmse,
    validity_rate,
)
from .report import EvalReport, MetricValue
from .text import METRIC_NAMES, text_metrics, tokenize

__all__ = [
    "MetricError",
    "NoAnswerFound",
    "GoldInvalid",
    "EmptyInput",
    "ExtractedAnswer",
    "extract_answer",
    "KINDS",
    "em_smiles",
    "em_formula",
    "em_iupac",
    "fts",
    "validity_rate",
    "regression_rmse",
    "classification_accuracy",
    "multi_opt_success",
    "text_metrics",
    "tokenize",
    "METRIC_NAMES",
    "MetricValue",
    "EvalReport",
]
