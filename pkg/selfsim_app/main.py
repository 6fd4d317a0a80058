# selfsim_app/main.py
"""Command-line surface: validate, quotient, classify, trace, monoid, example(s), selfcheck.

Exit status: 0 on success, 2 when a description violates the axioms or the
analysis cannot run within its configured bounds, 3 when a
document cannot be read or parsed. Verdicts never change the exit status;
``selfcheck`` alone exits 1 when a witness fails to replay.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Any

from selfsim_app.core.catalog import CATALOG, UnknownExampleError, catalog_instances, get_example
from selfsim_app.core.certificates import replay_report
from selfsim_app.core.classifier import LogFn, classify, consistency_problems
from selfsim_app.core.document import (
    DocumentParseError,
    dumps,
    quotient_document,
    read_ssg,
    ssg_document,
    write_document,
)
from selfsim_app.core.graph_analysis import ResourceExceededError
from selfsim_app.core.model import SelfSimilarGraph, ValidationError
from selfsim_app.core.monoid import BoundTooSmallError, is_group_nonzero, monoid_of
from selfsim_app.core.quotient import build_quotient
from selfsim_app.core.report import group_test_dict, render_failed_text, render_text, report_to_dict, trace_dict
from selfsim_app.core.settings import AnalysisConfig, load_config
from selfsim_app.core.trace_lp import solve_graph_g_trace, solve_graph_trace

logger = logging.getLogger("selfsim_app")

EXIT_OK = 0
EXIT_SELFCHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_PARSE = 3


class _Failure(Exception):
    def __init__(self, code: int, lines: Sequence[str]) -> None:
        super().__init__(lines[0] if lines else "")
        self.code = code
        self.lines = list(lines)


def _load(path: str) -> SelfSimilarGraph:
    try:
        return read_ssg(path)
    except ValidationError as exc:
        raise _Failure(EXIT_INVALID, [f"{path}: {v}" for v in exc.violations]) from exc
    except DocumentParseError as exc:
        raise _Failure(EXIT_PARSE, [f"{path}: {exc}"]) from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _stderr_log(verbose: int) -> LogFn:
    if not verbose:
        return None
    return lambda msg: print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    ssg = _load(args.path)
    print(
        f"{args.path}: valid ({len(ssg.graph.vertices)} vertices, {len(ssg.graph.edges)} edges, "
        f"group of order {ssg.group.order})"
    )
    return EXIT_OK


def cmd_quotient(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    q = build_quotient(_load(args.path))
    _emit(dumps(quotient_document(q)), args.out)
    return EXIT_OK


def _classify_one(path: str, cfg: AnalysisConfig, log: LogFn) -> dict[str, Any]:
    ssg = _load(path)
    try:
        return report_to_dict(classify(ssg, cfg, log))
    except BoundTooSmallError as exc:
        raise _Failure(EXIT_INVALID, [f"{path}: monoid: {exc}"]) from exc
    except ResourceExceededError as exc:
        raise _Failure(EXIT_INVALID, [f"{path}: {exc}"]) from exc


def _failed_entry(path: str, failure: _Failure) -> dict[str, Any]:
    return {"name": Path(path).stem, "path": path, "error": "; ".join(failure.lines)}


def cmd_classify(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    log = _stderr_log(args.verbose)

    def run(path: str) -> dict[str, Any] | _Failure:
        try:
            return _classify_one(path, cfg, log)
        except _Failure as failure:
            return failure

    if cfg.jobs > 1 and len(args.paths) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(run, args.paths))
    else:
        results = [run(p) for p in args.paths]

    failures = [r for r in results if isinstance(r, _Failure)]
    for failure in failures:
        for line in failure.lines:
            print(line, file=sys.stderr)

    # failed files keep their slot so the output follows argument order
    docs = [_failed_entry(p, r) if isinstance(r, _Failure) else r for p, r in zip(args.paths, results)]
    if cfg.report_format == "text":
        sys.stdout.write("\n".join(render_failed_text(d) if "error" in d else render_text(d) for d in docs))
    elif len(args.paths) > 1:
        sys.stdout.write(dumps(docs))
    elif not failures:
        sys.stdout.write(dumps(docs[0]))
    return failures[0].code if failures else EXIT_OK


def cmd_trace(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    ssg = _load(args.path)
    q = build_quotient(ssg)
    doc = {
        "name": ssg.name,
        "g_trace": trace_dict(solve_graph_g_trace(ssg)),
        "graph_trace": trace_dict(solve_graph_trace(ssg.graph)),
        "quotient_trace": trace_dict(solve_graph_trace(q.graph)),
    }
    sys.stdout.write(dumps(doc))
    return EXIT_OK


def cmd_monoid(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    ssg = _load(args.path)
    graph = ssg.graph if args.graph == "E" else build_quotient(ssg).graph
    try:
        verdict = is_group_nonzero(monoid_of(graph), cfg.monoid_identity_bound, cfg.monoid_bound, cfg.monoid_state_cap)
    except BoundTooSmallError as exc:
        raise _Failure(EXIT_INVALID, [f"monoid: {exc}"]) from exc
    if args.graph == "quotient":
        verdict = replace(verdict, heuristic=True)
    sys.stdout.write(dumps({"name": ssg.name, "graph": args.graph, **group_test_dict(verdict)}))
    return EXIT_OK


def cmd_example(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    try:
        ssg = get_example(args.name, args.n)
    except (UnknownExampleError, ValueError) as exc:
        raise _Failure(EXIT_INVALID, [str(exc).strip("'\"")]) from exc
    if args.out:
        write_document(ssg_document(ssg), args.out)
    else:
        sys.stdout.write(dumps(ssg_document(ssg)))
    return EXIT_OK


def cmd_examples(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    for entry in CATALOG.values():
        size = " [--n N]" if entry.takes_n else ""
        print(f"{entry.name}{size}: {entry.description}")
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace, cfg: AnalysisConfig) -> int:
    log = _stderr_log(args.verbose)
    bad = 0
    for ssg in catalog_instances():
        report = classify(ssg, cfg, log)
        problems = replay_report(ssg, report) + consistency_problems(report)
        status = "ok" if not problems else "FAILED: " + "; ".join(problems)
        print(f"{ssg.name}: {status}")
        bad += bool(problems)
    return EXIT_SELFCHECK_FAILED if bad else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_monoid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--monoid-bound", type=int, default=None, help="total degree explored by the monoid search")
    p.add_argument("--identity-bound", type=int, default=None, help="largest degree of an identity candidate")
    p.add_argument("--state-cap", type=int, default=None, help="elements one monoid search may visit")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfsim", description="Decision procedures for finite self-similar graphs.")
    parser.add_argument("--config", default=None, help="JSON config file (default: per-user config)")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a description against the axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("quotient", help="write the orbit quotient graph")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("paths", nargs="+")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="report_format", action="store_const", const="json", default=None)
    fmt.add_argument("--text", dest="report_format", action="store_const", const="text")
    p.add_argument("--jobs", type=int, default=None, help="files analysed concurrently")
    _add_monoid_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("trace", help="graph trace and G-trace with certificates")
    p.add_argument("path")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("monoid", help="bounded group test on the graph monoid")
    p.add_argument("path")
    p.add_argument("--graph", choices=("E", "quotient"), default="E")
    _add_monoid_flags(p)
    p.set_defaults(func=cmd_monoid)

    p = sub.add_parser("example", help="write a shipped example as an input document")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("examples", help="list the shipped examples")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("selfcheck", help="classify the catalog and replay every witness")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def apply_cli_overrides(cfg: AnalysisConfig, args: argparse.Namespace) -> AnalysisConfig:
    return cfg.with_overrides(
        monoid_bound=getattr(args, "monoid_bound", None),
        monoid_identity_bound=getattr(args, "identity_bound", None),
        monoid_state_cap=getattr(args, "state_cap", None),
        jobs=getattr(args, "jobs", None),
        report_format=getattr(args, "report_format", None),
    )


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    cfg = apply_cli_overrides(load_config(args.config), args)
    func: Callable[[argparse.Namespace, AnalysisConfig], int] = args.func
    try:
        return func(args, cfg)
    except _Failure as failure:
        for line in failure.lines:
            print(line, file=sys.stderr)
        return failure.code
    except OSError as exc:
        print(f"selfsim: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
