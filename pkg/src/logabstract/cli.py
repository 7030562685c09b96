"""Command-line driver: parse, eval, stabilize, bench.

Exit codes: 0 success, 1 usage or configuration error, 2 I/O error,
3 evaluation error. Diagnostics go to stderr; results go to stdout and to
files under --outdir.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import io
from .config import DatasetConfig, load_config
from .errors import ConfigurationError, EvaluationError, HeaderMismatchError
from .evaluation import efficiency_benchmark, evaluate_against_truth, stabilization_curve
from .pipeline import parse_raw_lines, read_log_lines

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_EVAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we own the codes
        raise _UsageError(message)


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="config file path or bundled dataset name")
    common.add_argument("--outdir", required=True, help="directory for output files")
    common.add_argument("--threshold", type=float, default=None, help="override similarity threshold")
    common.add_argument("--mode", choices=("count", "strict"), default=None, help="override grouping mode")
    common.add_argument("--strict-headers", action="store_true", help="abort on header mismatch instead of skipping")

    parser = _Parser(prog="logabstract", description="Log template extraction and evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="parse a raw log file into structured CSVs")
    p.add_argument("--input", required=True, help="raw log file")

    p = sub.add_parser("eval", parents=[common], help="score accuracy against a labeled CSV")
    p.add_argument("--ground-truth", required=True, help="labeled CSV with Content,EventId,EventTemplate")

    p = sub.add_parser("stabilize", parents=[common], help="template discovery over growing prefixes")
    p.add_argument("--input", required=True, help="raw log file")

    p = sub.add_parser("bench", parents=[common], help="end-to-end timing over doubling prefixes")
    p.add_argument("--input", required=True, help="raw log file")
    p.add_argument("--start", type=int, default=10000, help="first prefix size (default 10000)")

    return parser


def _max_workers() -> int:
    raw = os.environ.get("AWSOM_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigurationError(f"AWSOM_THREADS must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise ConfigurationError(f"AWSOM_THREADS must be a positive integer, got {raw!r}")
    return workers


def _load_config(args) -> DatasetConfig:
    config = load_config(args.config)
    return config.with_overrides(
        threshold=args.threshold,
        mode=args.mode,
        strict_headers=args.strict_headers,
    )


def _cmd_parse(args) -> int:
    config = _load_config(args)
    result = parse_raw_lines(read_log_lines(args.input), config)
    outdir = Path(args.outdir)
    name = Path(args.input).name
    structured = io.write_structured(outdir / f"{name}_structured.csv", result.records, result.store)
    templates = io.write_templates(outdir / f"{name}_templates.csv", result.store.templates)
    print(
        f"{config.name}: parsed {len(result.records)} line(s) "
        f"({len(result.skipped)} skipped) into {len(result.store.templates)} template(s)"
    )
    print(f"wrote {structured}")
    print(f"wrote {templates}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    config = _load_config(args)
    truth = io.load_ground_truth(args.ground_truth)
    report = evaluate_against_truth(truth, config)
    out = io.write_report(Path(args.outdir) / f"{Path(args.ground_truth).name}_report.json", report)
    json.dump(report.as_dict(), sys.stdout, indent=2)
    print()
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def _cmd_stabilize(args) -> int:
    config = _load_config(args)
    points = stabilization_curve(read_log_lines(args.input), config, max_workers=_max_workers())
    out = io.write_stabilization(Path(args.outdir) / f"{Path(args.input).name}_stabilization.csv", points)
    for fraction, found, total, ratio in points:
        print(f"{fraction:>5.0%}  {found:>4}/{total:<4}  {ratio:.3f}")
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


def _cmd_bench(args) -> int:
    config = _load_config(args)
    samples = efficiency_benchmark(read_log_lines(args.input), args.start, config)
    out = io.write_timings(Path(args.outdir) / f"{Path(args.input).name}_timings.csv", samples)
    for count, elapsed in samples:
        print(f"{count:>9} events  {elapsed:8.3f} s")
    print(f"wrote {out}", file=sys.stderr)
    return EXIT_OK


_COMMANDS = {
    "parse": _cmd_parse,
    "eval": _cmd_eval,
    "stabilize": _cmd_stabilize,
    "bench": _cmd_bench,
}


def run_cli(argv) -> int:
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, HeaderMismatchError) as exc:
        print(f"input/output error: {exc}", file=sys.stderr)
        return EXIT_IO
    except EvaluationError as exc:
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
