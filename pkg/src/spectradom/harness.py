"""Exhaustive verification runs and their reports.

The harness wires enumeration (or graph6 ingestion) to the theorem
checkers and aggregates verdicts.  Everything here is deterministic:
graphs are processed in a fixed order, parallel chunks are merged in
submission order, violation lists are sorted, and report serialization
avoids nondeterministic fields, so two runs with different worker
counts emit byte-identical JSON.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from . import backend
from .canonical import canonical_mask, graph_from_triangle_mask
from .domination import domination_number
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import Graph
from .structure import construct_extremal_L, construct_extremal_Q
from .theorems import THEOREM_ORDER, check_theorem_L, check_theorem_Q, run_checks

ENUMERATION_MAX_VERTICES = 7

# canonical triangle-mask lists per n are small; cache them for the many
# census calls that re-enumerate the same order
_sieve_cache: dict[int, list[int]] = {}


def _sieve(n: int) -> list[int]:
    if n not in _sieve_cache:
        _sieve_cache[n] = backend.sieve_canonical_masks(n)
    return _sieve_cache[n]


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """All non-isomorphic graphs on n vertices, canonically labelled.

    Ascending canonical-mask order, starting with the edgeless graph.
    Exhaustive generation caps at 7 vertices (1044 graphs); for larger
    inputs, ingest externally generated graph6 files instead.
    """
    if not 1 <= n <= ENUMERATION_MAX_VERTICES:
        raise ValueError(
            f"exhaustive enumeration caps at {ENUMERATION_MAX_VERTICES} vertices "
            f"(got {n}); feed larger graphs through graph6 ingestion"
        )
    for mask in _sieve(n):
        yield graph_from_triangle_mask(n, mask)


def ingest_lines(
    lines: Iterable[str],
    lenient: bool = False,
    errors: Optional[list[tuple[int, str]]] = None,
    source: str = "<lines>",
) -> Iterator[Graph]:
    """Parse graph6 lines, skipping blanks and # comments.

    Strict mode re-raises the first parse failure with its line number.
    Lenient mode skips bad lines, recording (line_number, message) into
    errors when a list is supplied.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if not lenient:
                raise Graph6Error(f"{source}:{lineno}: {exc}") from exc
            if errors is not None:
                errors.append((lineno, str(exc)))


def ingest_graph6(
    path: str,
    lenient: bool = False,
    errors: Optional[list[tuple[int, str]]] = None,
) -> Iterator[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        yield from ingest_lines(fh, lenient=lenient, errors=errors, source=path)


# -- suite runs ----------------------------------------------------------


@dataclass
class TheoremCounts:
    checked: int = 0
    bound_violations: int = 0
    equality_cases: int = 0
    characterization_mismatches: int = 0


@dataclass
class SuiteReport:
    """Aggregated verdicts over one graph source.

    rows holds one tuple per (graph, theorem) verdict in processing
    order: (graph6, theorem_id, n, gamma, bound, value, holds, equality,
    recognizer, consistent).  violations carries only failures,
    sorted by (graph6, theorem_id).  elapsed is wall-clock seconds and
    deliberately excluded from JSON output so runs are reproducible
    byte for byte.
    """

    source_description: str
    graphs_processed: int = 0
    verdicts_by_theorem: dict[str, TheoremCounts] = field(default_factory=dict)
    violations: list[dict[str, str]] = field(default_factory=list)
    rows: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def clean(self) -> bool:
        return not self.violations


Row = tuple


def _check_batch(args: tuple[list[str], Optional[tuple[str, ...]]]) -> tuple[list[Row], list[dict]]:
    """Worker: verdict rows and violation entries for a batch of graph6."""
    lines, checks = args
    rows: list[Row] = []
    violations: list[dict] = []
    for g6 in lines:
        g = parse_graph6(g6)
        for v in run_checks(g, checks):
            rows.append(
                (
                    g6,
                    v.theorem_id,
                    v.n,
                    v.gamma,
                    v.bound_value,
                    v.computed_value,
                    v.bound_holds,
                    v.equality,
                    v.recognizer_accepts,
                    v.characterization_consistent,
                )
            )
            if not v.bound_holds:
                violations.append(
                    {
                        "graph6": g6,
                        "theorem_id": v.theorem_id,
                        "detail": f"bound violated: {v.detail}",
                    }
                )
            if not v.characterization_consistent:
                violations.append(
                    {
                        "graph6": g6,
                        "theorem_id": v.theorem_id,
                        "detail": f"characterization mismatch: {v.detail} "
                        f"(equality={v.equality}, recognizer={v.recognizer_accepts})",
                    }
                )
    return rows, violations


def _batches(graphs: Iterable[Graph], size: int, checks) -> Iterator[tuple[list[str], object]]:
    batch: list[str] = []
    for g in graphs:
        batch.append(emit_graph6(g))
        if len(batch) >= size:
            yield batch, checks
            batch = []
    if batch:
        yield batch, checks


def _absorb(report: SuiteReport, counts: dict, rows: list[Row], violations: list[dict]) -> None:
    for row in rows:
        tc = counts.setdefault(row[1], TheoremCounts())
        tc.checked += 1
        if not row[6]:
            tc.bound_violations += 1
        if row[7]:
            tc.equality_cases += 1
        if not row[9]:
            tc.characterization_mismatches += 1
    report.rows.extend(rows)
    report.violations.extend(violations)


def run_suite(
    graphs: Iterable[Graph],
    checks: Optional[Sequence[str]] = None,
    jobs: int = 1,
    fail_fast: bool = False,
    source_description: str = "",
) -> SuiteReport:
    """Run the requested checks over every graph and aggregate.

    checks = None means all applicable checks per graph.  jobs > 1
    fans batches out to worker processes; results merge in submission
    order, so the report is identical for any worker count.  fail_fast
    stops after the first graph (sequential) or batch (parallel)
    containing a violation.  Graphs yielding no verdicts (edgeless)
    still count as processed.
    """
    if checks is not None:
        checks = tuple(checks)
        bad = [c for c in checks if c not in THEOREM_ORDER]
        if bad:
            raise ValueError(f"unknown theorem ids: {bad}; known: {list(THEOREM_ORDER)}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    report = SuiteReport(source_description=source_description)
    counts: dict[str, TheoremCounts] = {}
    start = time.perf_counter()

    if jobs == 1:
        for g in graphs:
            rows, violations = _check_batch(([emit_graph6(g)], checks))
            report.graphs_processed += 1
            _absorb(report, counts, rows, violations)
            if fail_fast and violations:
                break
    else:
        batches = list(_batches(graphs, 64, checks))
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            for batch, (rows, violations) in zip(batches, pool.imap(_check_batch, batches)):
                report.graphs_processed += len(batch[0])
                _absorb(report, counts, rows, violations)
                if fail_fast and violations:
                    pool.terminate()
                    break

    report.verdicts_by_theorem = {
        tid: counts[tid] for tid in THEOREM_ORDER if tid in counts
    }
    report.violations.sort(key=lambda v: (v["graph6"], v["theorem_id"]))
    report.elapsed = time.perf_counter() - start
    return report


# -- extremal census -------------------------------------------------------


@dataclass
class CensusReport:
    """found = equality holders among all graphs with this gamma;
    constructed = the family the characterization predicts.  Both lists
    are canonical graph6, sorted, so equality of lists is equality of
    isomorphism-class sets."""

    n: int
    gamma: int
    theorem_id: str
    found_extremal: list[str]
    constructed_extremal: list[str]

    @property
    def matches(self) -> bool:
        return self.found_extremal == self.constructed_extremal


def extremal_census(n: int, gamma: int, theorem: str) -> CensusReport:
    """Compare enumerated equality cases against the constructed family.

    theorem is T31 (Laplacian bound) or T41 (signless bound).  Valid
    gamma: 2..n-1 for T31, 1..n-1 for T41; n caps at 7.
    """
    if theorem not in ("T31", "T41"):
        raise ValueError(f"census supports T31 or T41, got {theorem!r}")
    if not 1 <= n <= ENUMERATION_MAX_VERTICES:
        raise ValueError(f"census needs 1 <= n <= {ENUMERATION_MAX_VERTICES}, got {n}")
    lo = 2 if theorem == "T31" else 1
    if not lo <= gamma <= n - 1:
        raise ValueError(
            f"{theorem} census needs {lo} <= gamma <= n-1, got gamma={gamma}, n={n}"
        )

    check = check_theorem_L if theorem == "T31" else check_theorem_Q
    # enumeration is already canonical and ascending, so found is sorted
    found_g6 = []
    for g in enumerate_nonisomorphic(n):
        if domination_number(g).gamma != gamma:
            continue
        if check(g, gamma).equality:
            found_g6.append(emit_graph6(g))

    if theorem == "T31":
        family = construct_extremal_L(n, gamma)
    else:
        family = construct_extremal_Q(n, gamma)
    constructed_g6 = [
        emit_graph6(graph_from_triangle_mask(n, mask))
        for mask in sorted({canonical_mask(g) for g in family})
    ]
    return CensusReport(
        n=n,
        gamma=gamma,
        theorem_id=theorem,
        found_extremal=found_g6,
        constructed_extremal=constructed_g6,
    )


# -- report serialization ----------------------------------------------------


def _float_cell(x: float) -> str:
    return format(x, ".12g")


def emit_report(report: SuiteReport | CensusReport, fmt: str = "json") -> str:
    """Serialize a report.  fmt is json or csv.

    JSON is stable: fixed key order, no timing fields, violation lists
    pre-sorted.  CSV for suite reports is one row per (graph, theorem)
    verdict under the header
    graph6,theorem,n,gamma,bound,value,holds,equality,recognizer,consistent;
    for census reports, membership rows under
    graph6,in_found,in_constructed.
    """
    if fmt not in ("json", "csv"):
        raise ValueError(f"format must be json or csv, got {fmt!r}")
    if isinstance(report, SuiteReport):
        if fmt == "json":
            doc = {
                "source_description": report.source_description,
                "graphs_processed": report.graphs_processed,
                "verdicts_by_theorem": {
                    tid: {
                        "checked": tc.checked,
                        "bound_violations": tc.bound_violations,
                        "equality_cases": tc.equality_cases,
                        "characterization_mismatches": tc.characterization_mismatches,
                    }
                    for tid, tc in report.verdicts_by_theorem.items()
                },
                "violations": report.violations,
            }
            return json.dumps(doc, indent=2) + "\n"
        lines = ["graph6,theorem,n,gamma,bound,value,holds,equality,recognizer,consistent"]
        for row in report.rows:
            g6, tid, n, gamma, bound, value, holds, eq, rec, cons = row
            lines.append(
                ",".join(
                    (
                        g6,
                        tid,
                        str(n),
                        str(gamma),
                        _float_cell(bound),
                        _float_cell(value),
                        str(holds).lower(),
                        str(eq).lower(),
                        str(rec).lower(),
                        str(cons).lower(),
                    )
                )
            )
        return "\n".join(lines) + "\n"
    if isinstance(report, CensusReport):
        if fmt == "json":
            doc = {
                "n": report.n,
                "gamma": report.gamma,
                "theorem_id": report.theorem_id,
                "found_extremal": report.found_extremal,
                "constructed_extremal": report.constructed_extremal,
            }
            return json.dumps(doc, indent=2) + "\n"
        lines = ["graph6,in_found,in_constructed"]
        found = set(report.found_extremal)
        constructed = set(report.constructed_extremal)
        for g6 in sorted(found | constructed):
            lines.append(
                f"{g6},{str(g6 in found).lower()},{str(g6 in constructed).lower()}"
            )
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot serialize {type(report).__name__}")
