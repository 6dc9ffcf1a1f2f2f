"""QA record model and the line-delimited wire format.

One record per line, JSON-encoded with sorted keys, so a dataset file can
be streamed, diffed, and content-hashed. The `meta` mapping always carries
`source` and `split`; evaluation tasks add their own keys (edit group,
optimization direction, gold routes) without schema changes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Iterable, Iterator

from ..chem import is_valid_smiles
from ..common import EMPTY_THINK_BLOCK, has_no_think_flag
from .errors import RecordInvalid
from .registry import TASKS

MODES = ("think", "no_think")

_TAG_RE = re.compile(r"</?(SMILES|IUPAC|MOLFORMULA)>")


@dataclass(frozen=True)
class QaRecord:
    task: str
    instruction: str
    output: str
    thinking: str | None = None
    mode: str = "think"
    meta: dict[str, Any] = field(default_factory=dict)

    def with_fields(self, **kw) -> "QaRecord":
        return replace(self, **kw)


def _check_tags(text: str, where: str, check_smiles: bool) -> None:
    """Tags must pair up, non-nested, same name open/close."""
    stack: list[tuple[str, int]] = []
    for m in _TAG_RE.finditer(text):
        name = m.group(1)
        closing = m.group(0).startswith("</")
        if not closing:
            if stack:
                raise RecordInvalid(f"{where}: nested <{name}> tag")
            stack.append((name, m.end()))
            continue
        if not stack:
            raise RecordInvalid(f"{where}: stray </{name}> tag")
        open_name, start = stack.pop()
        if open_name != name:
            raise RecordInvalid(
                f"{where}: <{open_name}> closed by </{name}>"
            )
        if check_smiles and name == "SMILES":
            body = text[start:m.start()]
            if not is_valid_smiles(body.strip()):
                raise RecordInvalid(
                    f"{where}: unparseable SMILES span {body.strip()!r}"
                )
    if stack:
        raise RecordInvalid(f"{where}: unclosed <{stack[-1][0]}> tag")


def validate_record(rec: QaRecord, check_smiles: bool = False) -> QaRecord:
    """Enforce the record contract; returns the record for chaining.

    check_smiles additionally parses every <SMILES> span, which is
    worthwhile for curated fixtures but too strict for raw corpora.
    """
    if rec.task not in TASKS:
        raise RecordInvalid(f"unknown task {rec.task!r}")
    if rec.mode not in MODES:
        raise RecordInvalid(f"mode must be one of {MODES}, got {rec.mode!r}")
    if not rec.instruction.strip():
        raise RecordInvalid("empty instruction")
    if not rec.output.strip():
        raise RecordInvalid("empty output")
    if rec.mode == "no_think":
        if not has_no_think_flag(rec.instruction):
            raise RecordInvalid(
                "no_think record whose instruction lacks the flag"
            )
        if not rec.output.startswith(EMPTY_THINK_BLOCK):
            raise RecordInvalid(
                "no_think record whose output lacks the empty think block"
            )
    _check_tags(rec.instruction, "instruction", check_smiles)
    _check_tags(rec.output, "output", check_smiles)
    return rec


def record_to_dict(rec: QaRecord) -> dict[str, Any]:
    return {
        "task": rec.task,
        "instruction": rec.instruction,
        "output": rec.output,
        "thinking": rec.thinking,
        "mode": rec.mode,
        "meta": rec.meta,
    }


def record_from_dict(d: dict[str, Any]) -> QaRecord:
    try:
        return QaRecord(
            task=d["task"],
            instruction=d["instruction"],
            output=d["output"],
            thinking=d.get("thinking"),
            mode=d.get("mode", "think"),
            meta=dict(d.get("meta") or {}),
        )
    except (KeyError, TypeError) as exc:
        raise RecordInvalid(f"bad record object: {exc}") from exc


def record_to_json(rec: QaRecord) -> str:
    return json.dumps(record_to_dict(rec), sort_keys=True,
                      ensure_ascii=False, separators=(",", ":"))


def record_from_json(line: str) -> QaRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise RecordInvalid(f"bad record line: {exc}") from exc
    if not isinstance(obj, dict):
        raise RecordInvalid("record line is not an object")
    return record_from_dict(obj)


def write_records(path: Path | str, records: Iterable[QaRecord]) -> int:
    """Write one record per line; returns the number written."""
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(record_to_json(rec))
            fh.write("\n")
            n += 1
    return n


def read_records(path: Path | str) -> Iterator[QaRecord]:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield record_from_json(line)


__all__ = [
    "QaRecord",
    "MODES",
    "validate_record",
    "record_to_dict",
    "record_from_dict",
    "record_to_json",
    "record_from_json",
    "write_records",
    "read_records",
]
