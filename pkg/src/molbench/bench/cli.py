"""Command-line benchmark driver.

bench run    execute a YAML-configured evaluation against an endpoint
bench render print the standard result tables for a finished run
bench forge  forward to the dataset builder CLI
"""

from __future__ import annotations

import argparse
import sys

from ..forge.cli import main as forge_main
from .config import load_config, with_resume
from .errors import BenchError
from .runner import load_reports, run_benchmark
from .tables import render_tables


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    if args.resume:
        cfg = with_resume(cfg, True)
    summary = run_benchmark(cfg)
    for result in summary.results:
        if result.status == "error":
            print(f"task: {result.task}  ERROR {result.error}")
        else:
            suffix = "  (resumed)" if result.status == "skipped" else ""
            print(result.report.render() + suffix)
        print()
    print(render_tables(summary.reports, label=cfg.endpoint.model))
    cache = summary.manifest["cache"]
    print(f"\ncache: {cache}")
    return 1 if summary.any_error else 0


def cmd_render(args) -> int:
    reports = load_reports(args.run)
    print(render_tables(reports, label=args.label))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench", description="molecular LM benchmark runner"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute a configured evaluation")
    run.add_argument("--config", required=True, help="YAML run file")
    run.add_argument(
        "--resume",
        action="store_true",
        help="skip tasks whose report file already exists",
    )
    run.set_defaults(func=cmd_run)

    render = sub.add_parser("render", help="print tables for a finished run")
    render.add_argument("--run", required=True, help="run output directory")
    render.add_argument("--label", default="model", help="row label")
    render.set_defaults(func=cmd_render)

    sub.add_parser(
        "forge",
        help="dataset builder (same as the forge command)",
        add_help=False,
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "forge":
        return forge_main(argv[1:])
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
