"""Command-line entry point for dataset builds.

    forge build --spec mixture.yaml --seed 17 --out out/

The spec file (YAML, JSON accepted) lists task sources:

    seed: 17            # optional; --seed wins
    tasks:
      - task: i2s
        path: sources/i2s.jsonl
        cap: 100000     # optional; omit to take the whole file

The build writes dataset.jsonl, manifest.json (with a content hash), and
the stats table in both machine (stats.json) and table (stats.txt) forms.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import yaml

from .errors import ForgeError
from .mixture import MixtureSpec, TaskSource, write_mixture
from .records import read_records
from .stats import compute_stats, render_stats_table


def load_mixture_spec(path: Path, seed_override: int | None = None) -> MixtureSpec:
    with open(path, encoding="utf-8") as fh:
        raw = yaml.safe_load(fh)
    if not isinstance(raw, dict) or "tasks" not in raw:
        raise ForgeError(f"{path}: expected a mapping with a 'tasks' list")
    base = path.parent
    sources = []
    for entry in raw["tasks"]:
        try:
            task = entry["task"]
            src_path = Path(entry["path"])
        except (KeyError, TypeError) as exc:
            raise ForgeError(f"{path}: bad task entry {entry!r}") from exc
        if not src_path.is_absolute():
            src_path = base / src_path
        sources.append(TaskSource(task=task, path=src_path,
                                  cap=entry.get("cap")))
    seed = seed_override if seed_override is not None else raw.get("seed", 0)
    return MixtureSpec(sources=tuple(sources), seed=int(seed))


def cmd_build(args: argparse.Namespace) -> int:
    spec = load_mixture_spec(Path(args.spec), args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    dataset_path = out_dir / "dataset.jsonl"
    manifest = write_mixture(spec, dataset_path)

    stats = compute_stats(read_records(dataset_path))
    stats.verify()
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    (out_dir / "stats.json").write_text(
        json.dumps(stats.to_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    table = render_stats_table(stats, scale_k=not args.raw_counts)
    (out_dir / "stats.txt").write_text(table + "\n", encoding="utf-8")
    print(f"wrote {manifest['written']} records to {dataset_path}")
    print(f"content sha256: {manifest['sha256']}")
    print(table)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="forge", description="Instruction dataset builder"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    build = sub.add_parser("build", help="sample a dataset mixture")
    build.add_argument("--spec", required=True, help="mixture spec file")
    build.add_argument("--seed", type=int, default=None,
                       help="override the spec's seed")
    build.add_argument("--out", required=True, help="output directory")
    build.add_argument("--raw-counts", action="store_true",
                       help="print raw pair counts instead of thousands")
    build.set_defaults(func=cmd_build)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ForgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
