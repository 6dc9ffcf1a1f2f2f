"""Benchmark run configuration loaded from YAML.

A run file names an endpoint, an output directory, and one entry per task.
Task entries resolve to a metric binding at load time, so a run that would
die mid-way on an unknown task or metric dies here instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml

from ..client import EndpointConfig
from ..forge.registry import TASKS
from .errors import ConfigError

# metric binding applied when a task entry names none, keyed by task kind
DEFAULT_BINDING = {
    "em_smiles": "em_smiles",
    "em_formula": "em_formula",
    "em_iupac": "em_iupac",
    "caption": "caption",
    "classification": "classification",
    "regression": "regression",
    "reaction": "reaction_suite",
    "generation": "generation_suite",
    "edit": "edit_sr",
    "opt_single": "opt_single_sr",
    "opt_multi": "opt_multi_sr",
}

THINKING_MODES = ("think", "no_think")


@dataclass(frozen=True)
class GenDefaults:
    """Fallback generation settings shared by every task entry."""

    thinking: str = "think"
    max_new_tokens: int = 1024
    temperature: float = 0.0

    def __post_init__(self):
        if self.thinking not in THINKING_MODES:
            raise ConfigError(f"unknown thinking mode: {self.thinking!r}")
        if self.max_new_tokens < 1:
            raise ConfigError("max_new_tokens must be positive")


@dataclass(frozen=True)
class TaskSpec:
    """One benchmark task: where its records live and how to query/score it.

    n is the number of sequences requested per instruction; multi-candidate
    tasks default to 20, everything else to a single greedy answer. A zero
    temperature with n > 1 would collapse the candidates, so sampling tasks
    fall back to 1.0 unless the entry pins a temperature itself.
    """

    task: str
    path: Path
    metric: str
    n: int
    thinking: str
    temperature: float
    max_new_tokens: int
    limit: int | None = None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ConfigError(f"unknown task: {self.task!r}")
        if self.metric not in DEFAULT_BINDING.values():
            raise ConfigError(
                f"{self.task}: unknown metric binding {self.metric!r}"
            )
        if self.n < 1:
            raise ConfigError(f"{self.task}: n must be at least 1")
        if self.thinking not in THINKING_MODES:
            raise ConfigError(
                f"{self.task}: unknown thinking mode {self.thinking!r}"
            )
        if self.limit is not None and self.limit < 1:
            raise ConfigError(f"{self.task}: limit must be positive")


@dataclass(frozen=True)
class BenchmarkConfig:
    endpoint: EndpointConfig
    tasks: tuple[TaskSpec, ...]
    out_dir: Path
    cache_dir: Path
    seed: int = 0
    resume: bool = False
    # property kind tag -> TSV path, bound into the oracle registry at run
    oracle_tables: dict[str, Path] = field(default_factory=dict)
    defaults: GenDefaults = field(default_factory=GenDefaults)

    def __post_init__(self):
        seen = set()
        for spec in self.tasks:
            if spec.task in seen:
                raise ConfigError(f"duplicate task entry: {spec.task}")
            seen.add(spec.task)
        if not self.tasks:
            raise ConfigError("a run needs at least one task")


def _require(mapping: dict, key: str, where: str):
    if key not in mapping:
        raise ConfigError(f"{where}: missing required key {key!r}")
    return mapping[key]


def _build_task(entry: dict, base: Path, defaults: GenDefaults) -> TaskSpec:
    if not isinstance(entry, dict):
        raise ConfigError(f"task entry must be a mapping, got {entry!r}")
    name = _require(entry, "task", "task entry")
    if name not in TASKS:
        raise ConfigError(f"unknown task: {name!r}")
    known = {
        "task", "path", "metric", "n", "thinking", "temperature",
        "max_new_tokens", "limit",
    }
    extra = set(entry) - known
    if extra:
        raise ConfigError(f"{name}: unknown keys {sorted(extra)}")
    path = base / str(_require(entry, "path", name))
    if not path.is_file():
        raise ConfigError(f"{name}: no task file at {path}")
    kind = TASKS[name].kind
    n = int(entry.get("n", 20 if kind == "opt_multi" else 1))
    if "temperature" in entry:
        temperature = float(entry["temperature"])
    elif n > 1:
        temperature = 1.0
    else:
        temperature = defaults.temperature
    return TaskSpec(
        task=name,
        path=path,
        metric=str(entry.get("metric", DEFAULT_BINDING[kind])),
        n=n,
        thinking=str(entry.get("thinking", defaults.thinking)),
        temperature=temperature,
        max_new_tokens=int(
            entry.get("max_new_tokens", defaults.max_new_tokens)
        ),
        limit=entry.get("limit"),
    )


def load_config(path: str | Path) -> BenchmarkConfig:
    """Parse and validate a YAML run file.

    Relative paths inside the file resolve against the file's directory.
    """
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"config is not valid YAML: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be a mapping")

    known = {
        "endpoint", "tasks", "out_dir", "cache_dir", "seed", "resume",
        "oracles", "defaults",
    }
    extra = set(raw) - known
    if extra:
        raise ConfigError(f"unknown top-level keys {sorted(extra)}")

    base = path.parent
    ep_raw = _require(raw, "endpoint", "config")
    if not isinstance(ep_raw, dict):
        raise ConfigError("endpoint must be a mapping")
    try:
        endpoint = EndpointConfig(
            base_url=str(_require(ep_raw, "base_url", "endpoint")),
            model=str(_require(ep_raw, "model", "endpoint")),
            token_env=ep_raw.get("token_env"),
            timeout=float(ep_raw.get("timeout", 60.0)),
            max_in_flight=int(ep_raw.get("max_in_flight", 4)),
            retries=int(ep_raw.get("retries", 2)),
            backoff=float(ep_raw.get("backoff", 0.25)),
        )
    except ValueError as exc:
        raise ConfigError(f"endpoint: {exc}") from exc

    defaults_raw = raw.get("defaults", {})
    if not isinstance(defaults_raw, dict):
        raise ConfigError("defaults must be a mapping")
    defaults = GenDefaults(
        thinking=str(defaults_raw.get("thinking", "think")),
        max_new_tokens=int(defaults_raw.get("max_new_tokens", 1024)),
        temperature=float(defaults_raw.get("temperature", 0.0)),
    )

    entries = _require(raw, "tasks", "config")
    if not isinstance(entries, list):
        raise ConfigError("tasks must be a list")
    tasks = tuple(_build_task(e, base, defaults) for e in entries)

    oracle_tables: dict[str, Path] = {}
    for tag, rel in (raw.get("oracles") or {}).items():
        table = base / str(rel)
        if not table.is_file():
            raise ConfigError(f"oracle table for {tag!r} missing: {table}")
        oracle_tables[str(tag)] = table

    out_dir = base / str(_require(raw, "out_dir", "config"))
    cache_dir = (
        base / str(raw["cache_dir"]) if "cache_dir" in raw
        else out_dir / "cache"
    )
    return BenchmarkConfig(
        endpoint=endpoint,
        tasks=tasks,
        out_dir=out_dir,
        cache_dir=cache_dir,
        seed=int(raw.get("seed", 0)),
        resume=bool(raw.get("resume", False)),
        oracle_tables=oracle_tables,
        defaults=defaults,
    )


def with_resume(cfg: BenchmarkConfig, resume: bool) -> BenchmarkConfig:
    return replace(cfg, resume=resume)


__all__ = [
    "DEFAULT_BINDING",
    "THINKING_MODES",
    "GenDefaults",
    "TaskSpec",
    "BenchmarkConfig",
    "load_config",
    "with_resume",
]
