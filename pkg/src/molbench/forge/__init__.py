"""Instruction-dataset pipeline: tagging, formatting, sampling, accounting."""

from .errors import (
    ForgeError,
    MissingThinking,
    OverlappingSpans,
    RecordInvalid,
    SourceMissing,
)
from .format import format_mode, no_think_output, split_think, think_output
from .mixture import MixtureSpec, TaskSource, sample_mixture, write_mixture
from .propgen import DEFAULT_TEMPLATES, answer_text, gen_property_pairs
from .records import (
    MODES,
    QaRecord,
    read_records,
    record_from_dict,
    record_from_json,
    record_to_dict,
    record_to_json,
    validate_record,
    write_records,
)
from .registry import CATEGORY_ORDER, SUBCATEGORY_ORDER, TASKS, TaskInfo, task_info
from .stats import DatasetStats, compute_stats, render_stats_table
from .tags import (
    TAG_PAIRS,
    SpanAnnotation,
    strip_molecular_tags,
    tag_molecular_spans,
    wrap,
)

__all__ = [
    "ForgeError",
    "OverlappingSpans",
    "MissingThinking",
    "SourceMissing",
    "RecordInvalid",
    "QaRecord",
    "MODES",
    "validate_record",
    "record_to_dict",
    "record_from_dict",
    "record_to_json",
    "record_from_json",
    "read_records",
    "write_records",
    "TaskInfo",
    "TASKS",
    "CATEGORY_ORDER",
    "SUBCATEGORY_ORDER",
    "task_info",
    "SpanAnnotation",
    "TAG_PAIRS",
    "tag_molecular_spans",
    "strip_molecular_tags",
    "wrap",
    "format_mode",
    "split_think",
    "think_output",
    "no_think_output",
    "DEFAULT_TEMPLATES",
    "answer_text",
    "gen_property_pairs",
    "TaskSource",
    "MixtureSpec",
    "sample_mixture",
    "write_mixture",
    "DatasetStats",
    "compute_stats",
    "render_stats_table",
]
