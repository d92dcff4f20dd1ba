"""Command-line front end.

Subcommands:

  analyze   per-graph invariants and applicable checks
  verify    run theorem checks over an enumeration or a graph6 file
  census    compare enumerated equality cases against the constructed family
  extremal  print the constructed extremal family as graph6 lines

Exit codes: 0 clean, 1 violations or census mismatch, 2 usage error
(argparse convention).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .domination import domination_number
from .graph6 import Graph6Error, parse_graph6
from .graphs import Graph, format_vertex_set
from .harness import (
    CensusReport,
    SuiteReport,
    emit_report,
    enumerate_nonisomorphic,
    extremal_census,
    ingest_graph6,
    ingest_lines,
)
from .spectral import summary
from .structure import construct_extremal_L, construct_extremal_Q
from .theorems import THEOREM_ORDER, run_checks
from .canonical import canonical_mask
from .graph6 import emit_graph6
from .canonical import graph_from_triangle_mask

_ALIASES = {"L": "T31", "Q": "T41"}


def _theorem_list(spec: str) -> Optional[tuple[str, ...]]:
    if spec.strip().lower() == "all":
        return None
    out = []
    for part in spec.split(","):
        name = part.strip()
        name = _ALIASES.get(name, name.upper() if name.upper() in THEOREM_ORDER else name)
        if name not in THEOREM_ORDER:
            raise argparse.ArgumentTypeError(
                f"unknown theorem {part.strip()!r}; known: all, "
                + ", ".join(THEOREM_ORDER)
                + ", L (=T31), Q (=T41)"
            )
        out.append(name)
    if not out:
        raise argparse.ArgumentTypeError("empty theorem list")
    return tuple(out)


def _jobs_value(args_jobs: Optional[int]) -> int:
    if args_jobs is not None:
        if args_jobs < 1:
            raise SystemExit("error: --jobs must be >= 1")
        return args_jobs
    env = os.environ.get("SPECTRADOM_JOBS", "").strip()
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise SystemExit(f"error: SPECTRADOM_JOBS={env!r} is not an integer")
        if jobs < 1:
            raise SystemExit("error: SPECTRADOM_JOBS must be >= 1")
        return jobs
    return os.cpu_count() or 1


def _print_analysis(g: Graph, label: str) -> bool:
    dom = domination_number(g)
    summ = summary(g)
    verdicts = run_checks(g, None, dom.gamma)
    print(f"graph {label}")
    print(
        f"  n={g.n} edges={g.edge_count()} max_degree={summ.max_degree} "
        f"avg_degree={summ.avg_degree:.10g}"
    )
    print(f"  gamma={dom.gamma} witness={format_vertex_set(dom.witness)}")
    print(f"  mu={summ.mu:.10g} q={summ.q:.10g}")
    if not verdicts:
        print("  checks: none apply (edgeless graph)")
        return True
    ok = True
    for v in verdicts:
        slack = v.bound_value - v.computed_value
        flags = []
        if v.equality:
            flags.append("equality")
        if v.recognizer_accepts:
            flags.append("recognizer")
        if not v.characterization_consistent:
            flags.append("INCONSISTENT")
        status = "ok" if v.bound_holds else "VIOLATION"
        if not v.bound_holds or not v.characterization_consistent:
            ok = False
        print(
            f"  {v.theorem_id:<13} {status:<9} slack={slack:+.3e} "
            f"{' '.join(flags) if flags else '-':<21} {v.detail}"
        )
    return ok


def _cmd_analyze(args) -> int:
    target = args.target
    graphs = []
    try:
        if target == "-":
            errors: list[tuple[int, str]] = []
            graphs = list(ingest_lines(sys.stdin, lenient=args.lenient, errors=errors, source="<stdin>"))
            for lineno, msg in errors:
                print(f"skipped <stdin>:{lineno}: {msg}", file=sys.stderr)
        elif os.path.exists(target):
            errors = []
            graphs = list(ingest_graph6(target, lenient=args.lenient, errors=errors))
            for lineno, msg in errors:
                print(f"skipped {target}:{lineno}: {msg}", file=sys.stderr)
        else:
            graphs = [parse_graph6(target)]
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.format == "human":
        ok = True
        for i, g in enumerate(graphs):
            if i:
                print()
            ok &= _print_analysis(g, emit_graph6(g))
        return 0 if ok else 1
    # structured formats reuse the suite machinery
    from .harness import run_suite

    report = run_suite(graphs, None, jobs=1, source_description=f"analyze {target}")
    sys.stdout.write(emit_report(report, args.format))
    return 0 if report.clean else 1


def _cmd_verify(args) -> int:
    checks = args.theorems
    jobs = _jobs_value(args.jobs)
    from .harness import run_suite

    try:
        if args.n is not None:
            source = enumerate_nonisomorphic(args.n)
            desc = f"all non-isomorphic graphs on {args.n} vertices"
            report = run_suite(source, checks, jobs=jobs, fail_fast=args.fail_fast, source_description=desc)
            skipped: list[tuple[int, str]] = []
        else:
            skipped = []
            if args.input == "-":
                graphs = list(
                    ingest_lines(sys.stdin, lenient=args.lenient, errors=skipped, source="<stdin>")
                )
                desc = "graph6 from stdin"
            else:
                graphs = list(ingest_graph6(args.input, lenient=args.lenient, errors=skipped))
                desc = f"graph6 file {args.input}"
            report = run_suite(graphs, checks, jobs=jobs, fail_fast=args.fail_fast, source_description=desc)
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    for lineno, msg in skipped:
        print(f"skipped line {lineno}: {msg}", file=sys.stderr)

    if args.format == "human":
        _print_suite_human(report)
    else:
        sys.stdout.write(emit_report(report, args.format))
    return 0 if report.clean else 1


def _print_suite_human(report: SuiteReport) -> None:
    print(f"source: {report.source_description}")
    print(f"graphs processed: {report.graphs_processed}")
    print(f"elapsed: {report.elapsed:.2f}s")
    header = f"{'theorem':<13} {'checked':>8} {'violations':>11} {'equality':>9} {'mismatches':>11}"
    print(header)
    for tid, tc in report.verdicts_by_theorem.items():
        print(
            f"{tid:<13} {tc.checked:>8} {tc.bound_violations:>11} "
            f"{tc.equality_cases:>9} {tc.characterization_mismatches:>11}"
        )
    if report.violations:
        print(f"VERDICT: {len(report.violations)} violation(s)")
        for v in report.violations:
            print(f"  {v['graph6']}  {v['theorem_id']}  {v['detail']}")
    else:
        print("VERDICT: all checks passed")


def _cmd_census(args) -> int:
    try:
        report = extremal_census(args.n, args.gamma, args.theorem)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "human":
        _print_census_human(report)
    else:
        sys.stdout.write(emit_report(report, args.format))
        print(
            f"census {report.theorem_id} n={report.n} gamma={report.gamma}: "
            + ("families match" if report.matches else "MISMATCH"),
            file=sys.stderr,
        )
    return 0 if report.matches else 1


def _print_census_human(report: CensusReport) -> None:
    print(f"census {report.theorem_id} n={report.n} gamma={report.gamma}")
    print(f"found extremal ({len(report.found_extremal)}):")
    for g6 in report.found_extremal:
        print(f"  {g6}")
    print(f"constructed family ({len(report.constructed_extremal)}):")
    for g6 in report.constructed_extremal:
        print(f"  {g6}")
    print("families match" if report.matches else "MISMATCH")


def _cmd_extremal(args) -> int:
    try:
        if args.theorem == "T31":
            family = construct_extremal_L(args.n, args.gamma)
        else:
            family = construct_extremal_Q(args.n, args.gamma)
        masks = sorted({canonical_mask(g) for g in family})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for mask in masks:
        print(emit_graph6(graph_from_triangle_mask(args.n, mask)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectradom",
        description="Domination numbers, Laplacian spectral radii, and "
        "exhaustive verification of the bounds relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants and checks for given graphs")
    p.add_argument("target", help="graph6 string, file of graph6 lines, or - for stdin")
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--lenient", action="store_true", help="skip unparsable lines")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run theorem checks over a graph source")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="enumerate all graphs on n vertices (n <= 7)")
    src.add_argument("--input", help="graph6 file, or - for stdin")
    p.add_argument(
        "--theorems",
        type=_theorem_list,
        default=None,
        help="comma-separated theorem ids, or all (default)",
    )
    p.add_argument("--format", choices=("human", "json", "csv"), default="json")
    p.add_argument("--lenient", action="store_true", help="skip unparsable lines")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first violation")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: SPECTRADOM_JOBS or cpu count)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("census", help="equality holders vs constructed family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument(
        "--theorem",
        type=lambda s: _ALIASES.get(s, s),
        choices=("T31", "T41"),
        required=True,
        help="T31/L (Laplacian) or T41/Q (signless)",
    )
    p.add_argument("--format", choices=("human", "json", "csv"), default="json")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("extremal", help="print a constructed extremal family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument(
        "--theorem",
        type=lambda s: _ALIASES.get(s, s),
        choices=("T31", "T41"),
        required=True,
    )
    p.set_defaults(func=_cmd_extremal)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
