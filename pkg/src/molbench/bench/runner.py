"""Benchmark execution: query the model per task, score, write reports.

Reports are deterministic functions of the task records and model texts, so
a warm-cache rerun writes byte-identical files; wall-clock facts live only
in the run manifest. Tasks are isolated: one task blowing up is recorded in
the manifest and the rest still run.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from ..client import ClientError, GenParams, ModelClient
from ..forge.records import read_records
from ..metrics import EvalReport, MetricValue
from ..props import OracleBinding, OracleRegistry, kind_of
from .bindings import BINDINGS, ScoreContext
from .config import BenchmarkConfig, TaskSpec

MANIFEST_NAME = "run_manifest.json"


@dataclass
class TaskRunResult:
    task: str
    status: str  # ok | skipped | error
    report: EvalReport | None = None
    error: str = ""


@dataclass
class RunSummary:
    manifest: dict
    results: list[TaskRunResult] = field(default_factory=list)

    @property
    def any_error(self) -> bool:
        return any(r.status == "error" for r in self.results)

    @property
    def reports(self) -> dict[str, EvalReport]:
        return {
            r.task: r.report for r in self.results if r.report is not None
        }


def report_path(out_dir: Path, task: str) -> Path:
    return Path(out_dir) / f"{task}.report.json"


def _report_from_dict(data: dict) -> EvalReport:
    return EvalReport(
        task=data["task"],
        values=[
            MetricValue(m["name"], m["value"], m["support"])
            for m in data["metrics"]
        ],
        failures=dict(data["failures"]),
        scored=data["scored"],
        manifest=data.get("manifest", ""),
    )


def _write_report(path: Path, report: EvalReport) -> None:
    path.write_text(
        json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )


def _config_digest(cfg: BenchmarkConfig) -> str:
    view = {
        "endpoint": {
            "base_url": cfg.endpoint.base_url,
            "model": cfg.endpoint.model,
        },
        "seed": cfg.seed,
        "oracles": {k: str(v) for k, v in sorted(cfg.oracle_tables.items())},
        "tasks": [
            {
                "task": s.task,
                "path": str(s.path),
                "metric": s.metric,
                "n": s.n,
                "thinking": s.thinking,
                "temperature": s.temperature,
                "max_new_tokens": s.max_new_tokens,
                "limit": s.limit,
            }
            for s in cfg.tasks
        ],
    }
    blob = json.dumps(view, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def build_oracle_registry(cfg: BenchmarkConfig) -> OracleRegistry:
    registry = OracleRegistry()
    for tag, table in cfg.oracle_tables.items():
        registry.bind(OracleBinding(kind=kind_of(tag), source=table))
    return registry


def run_task(
    spec: TaskSpec,
    client: ModelClient,
    ctx: ScoreContext,
) -> EvalReport:
    records = list(read_records(spec.path))
    if spec.limit is not None:
        records = records[: spec.limit]
    if not records:
        raise ValueError(f"{spec.task}: task file holds no records")

    params = GenParams(
        temperature=spec.temperature,
        max_new_tokens=spec.max_new_tokens,
        num_return_sequences=spec.n,
        thinking=spec.thinking,
    )
    responses = client.batch_generate(
        [rec.instruction for rec in records], params
    )

    recs_ok, texts_ok, client_errors = [], [], 0
    for rec, resp in zip(records, responses):
        if isinstance(resp, ClientError):
            client_errors += 1
            continue
        recs_ok.append(rec)
        texts_ok.append(list(resp.texts))

    outcome = BINDINGS[spec.metric](spec.task, recs_ok, texts_ok, ctx)
    report = EvalReport(
        task=spec.task,
        values=list(outcome.values),
        failures=dict(outcome.failures),
        scored=outcome.scored,
        manifest=(
            f"metric={spec.metric} n={spec.n} thinking={spec.thinking}"
            f" temperature={spec.temperature}"
        ),
    )
    if client_errors:
        report.add_failure("client_error", client_errors)
    report.check(len(records))
    return report


def run_benchmark(
    cfg: BenchmarkConfig,
    transport=None,
    now=lambda: datetime.now(timezone.utc),
) -> RunSummary:
    """Execute every configured task and write reports plus a manifest.

    transport is injectable for offline runs; now() stamps the manifest.
    """
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    client = ModelClient(
        cfg.endpoint, cache_dir=cfg.cache_dir, transport=transport
    )
    ctx = ScoreContext(oracles=build_oracle_registry(cfg))
    started = now().isoformat()

    results: list[TaskRunResult] = []
    for spec in cfg.tasks:
        path = report_path(out_dir, spec.task)
        if cfg.resume and path.is_file():
            report = _report_from_dict(
                json.loads(path.read_text(encoding="utf-8"))
            )
            results.append(TaskRunResult(spec.task, "skipped", report))
            continue
        try:
            report = run_task(spec, client, ctx)
        except Exception as exc:  # noqa: BLE001 - task isolation boundary
            results.append(
                TaskRunResult(spec.task, "error", None, f"{type(exc).__name__}: {exc}")
            )
            continue
        _write_report(path, report)
        results.append(TaskRunResult(spec.task, "ok", report))

    manifest = {
        "config_sha256": _config_digest(cfg),
        "seed": cfg.seed,
        "endpoint": {
            "base_url": cfg.endpoint.base_url,
            "model": cfg.endpoint.model,
        },
        "started": started,
        "finished": now().isoformat(),
        "cache": client.cache_stats(),
        "tasks": {
            r.task: {
                "status": r.status,
                "error": r.error,
                "total": r.report.total if r.report else 0,
                "scored": r.report.scored if r.report else 0,
            }
            for r in results
        },
    }
    (out_dir / MANIFEST_NAME).write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
    return RunSummary(manifest=manifest, results=results)


def load_reports(out_dir: str | Path) -> dict[str, EvalReport]:
    """Read every task report under a finished run directory."""
    reports = {}
    for path in sorted(Path(out_dir).glob("*.report.json")):
        data = json.loads(path.read_text(encoding="utf-8"))
        reports[data["task"]] = _report_from_dict(data)
    return reports


__all__ = [
    "MANIFEST_NAME",
    "TaskRunResult",
    "RunSummary",
    "report_path",
    "build_oracle_registry",
    "run_task",
    "run_benchmark",
    "load_reports",
]
