"""Benchmark configuration, execution, and reporting."""

from .bindings import (
    BINDINGS,
    NO_NUMERIC_ANSWER,
    ORACLE_MISS,
    SUBTASK_ORDER,
    ScoreContext,
    ScoreOutcome,
)
from .config import (
    DEFAULT_BINDING,
    BenchmarkConfig,
    GenDefaults,
    TaskSpec,
    load_config,
    with_resume,
)
from .errors import BenchError, ConfigError
from .runner import (
    MANIFEST_NAME,
    RunSummary,
    TaskRunResult,
    build_oracle_registry,
    load_reports,
    report_path,
    run_benchmark,
    run_task,
)
from .tables import render_tables

__all__ = [
    "BenchError",
    "ConfigError",
    "BenchmarkConfig",
    "GenDefaults",
    "TaskSpec",
    "DEFAULT_BINDING",
    "load_config",
    "with_resume",
    "BINDINGS",
    "ScoreContext",
    "ScoreOutcome",
    "ORACLE_MISS",
    "NO_NUMERIC_ANSWER",
    "SUBTASK_ORDER",
    "run_benchmark",
    "run_task",
    "RunSummary",
    "TaskRunResult",
    "MANIFEST_NAME",
    "report_path",
    "build_oracle_registry",
    "load_reports",
    "render_tables",
]
