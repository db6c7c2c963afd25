"""Corpus verification suites.

Each suite checks one known bound on every graph of a graph6 corpus:

========== ============================ =====================================
suite      graphs considered            check
========== ============================ =====================================
reed       minimum degree >= 3          gamma <= floor(3n/8)
ks         connected cubic              gamma <= floor(5n/14), except A1, A2
favaron    connected cubic              packing number >= ceil(n/8), except
                                        the Petersen graph
cubic14    connected cubic, n = 14      pd_{7/8} <= 4
largedom   connected cubic, n = 14      gamma = 5 only for the four catalog
                                        graphs
extremal   connected cubic              lists gamma = floor(5n/14), gamma =
                                        5n/14 and gamma > floor(5n/14)
========== ============================ =====================================

Per-graph work is a pure function, so it can be farmed out to worker
processes; results are merged and every list is sorted by graph6 key, making
reports independent of input order and worker count.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from typing import Iterable, Iterator

from .catalog import GAMMA_FIVE_AT_14, NamedGraphId, named_graph
from .exact import SolveTimeout, gamma_exact, pd_exact, rho_exact
from .generators import _petersen_like
from .graph import Graph, is_connected_cubic, is_supercubic
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .iso import canonical_code

SUITES = ("reed", "ks", "favaron", "cubic14", "largedom", "extremal")

GP_MAX_P = 16
GP_COINCIDENT = (3, 5, 6, 7, 8, 9, 11, 12)

_EXCEPTIONS = {
    "ks": (NamedGraphId.A1, NamedGraphId.A2),
    "favaron": (NamedGraphId.PETERSEN,),
    "largedom": GAMMA_FIVE_AT_14,
}


@dataclass
class Report:
    suite: str
    total: int = 0
    skipped: int = 0
    conforming: int = 0
    violations: list[dict] = field(default_factory=list)
    exceptions_found: list[dict] = field(default_factory=list)
    extremal: list[dict] = field(default_factory=list)
    over_bound: list[dict] = field(default_factory=list)
    ratio_equality: list[dict] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)
    timeouts: list[dict] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    corpus_lines: int = 0
    elapsed_ms: int = 0

    @property
    def failed(self) -> bool:
        return bool(self.violations or self.timeouts)

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "total": self.total,
            "skipped": self.skipped,
            "conforming": self.conforming,
            "corpus_lines": self.corpus_lines,
            "violations": self.violations,
            "exceptions_found": self.exceptions_found,
            "extremal": self.extremal,
            "over_bound": self.over_bound,
            "ratio_equality": self.ratio_equality,
            "errors": self.errors,
            "timeouts": self.timeouts,
        }
        if self.rows:
            out["rows"] = self.rows
        if self.summary:
            out["summary"] = self.summary
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def tsv(self) -> str:
        lines = [f"suite\t{self.suite}"]
        for key in ("total", "skipped", "conforming", "corpus_lines"):
            lines.append(f"{key}\t{getattr(self, key)}")
        for key in ("violations", "exceptions_found", "extremal", "over_bound",
                    "ratio_equality", "errors", "timeouts"):
            lines.append(f"{key}\t{len(getattr(self, key))}")
        for key, value in sorted(self.summary.items()):
            if isinstance(value, list):
                value = ",".join(map(str, value))
            lines.append(f"summary.{key}\t{value}")
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _exception_codes(suite: str) -> dict:
    return {canonical_code(named_graph(gid)): gid.value for gid in _EXCEPTIONS.get(suite, ())}


def _match(suite: str, g: Graph) -> str | None:
    if g.n > 32:
        return None
    return _exception_codes(suite).get(canonical_code(g))


def _in_scope(suite: str, g: Graph) -> bool:
    if suite == "reed":
        return is_supercubic(g)
    if suite in ("cubic14", "largedom"):
        return g.n == 14 and is_connected_cubic(g)
    return is_connected_cubic(g)


def check_graph(suite: str, g: Graph, key: str, timeout: float | None = None) -> dict:
    """Outcome of one suite on one graph: a dict with a ``status`` field."""
    if not _in_scope(suite, g):
        return {"status": "skip", "graph6": key}
    n = g.n
    try:
        if suite == "reed":
            value, bound = gamma_exact(g, timeout).value, 3 * n // 8
            ok = value <= bound
        elif suite == "ks":
            value, bound = gamma_exact(g, timeout).value, 5 * n // 14
            ok = value <= bound
        elif suite == "favaron":
            value, bound = rho_exact(g, timeout).value, -(-n // 8)
            ok = value >= bound
        elif suite == "cubic14":
            value, bound = pd_exact(g, "7/8", timeout).value, 4
            ok = value <= bound
        elif suite == "largedom":
            value, bound = gamma_exact(g, timeout).value, 4
            ok = value <= bound
        elif suite == "extremal":
            value, bound = gamma_exact(g, timeout).value, 5 * n // 14
            return {"status": "ok", "graph6": key, "observed": value, "bound": bound,
                    "extremal": value == bound, "equality": 14 * value == 5 * n,
                    "over": value > bound}
        else:
            raise ValueError(f"unknown suite {suite!r}")
    except SolveTimeout:
        return {"status": "timeout", "graph6": key}
    out = {"status": "ok", "graph6": key, "observed": value, "bound": bound}
    if ok:
        return out
    name = _match(suite, g)
    if suite == "largedom" and value != 5:
        name = None
    if name is not None:
        out.update(status="exception", match=name)
    else:
        out["status"] = "violation"
    return out


def _work(task: tuple) -> dict:
    suite, number, line, timeout = task
    try:
        g = parse_graph6(line)
    except (Graph6Error, ValueError) as exc:
        return {"status": "error", "line": number, "message": str(exc)}
    return check_graph(suite, g, line.decode("ascii"), timeout)


def _tasks(corpus: Iterable, suite: str, timeout: float | None) -> Iterator[tuple]:
    def lines():
        for item in corpus:
            yield write_graph6(item) if isinstance(item, Graph) else item

    for number, line in read_graph6_lines(lines()):
        yield suite, number, line, timeout


def _outcomes(tasks: Iterator[tuple], jobs: int) -> Iterator[dict]:
    if jobs <= 1:
        yield from map(_work, tasks)
        return
    batch = 256 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            chunk = list(islice(tasks, batch))
            if not chunk:
                return
            yield from pool.map(_work, chunk, chunksize=16)


def _entry(outcome: dict, *keys: str) -> dict:
    return {k: outcome[k] for k in ("graph6",) + keys if k in outcome}


def check_bounds(corpus: Iterable, suite: str, jobs: int = 1,
                 timeout_ms: int | None = None) -> Report:
    """Run ``suite`` over a corpus of graph6 lines (bytes or str) or Graphs."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    timeout = None if timeout_ms is None else timeout_ms / 1000
    start = time.monotonic()
    report = Report(suite)
    for out in _outcomes(_tasks(corpus, suite, timeout), jobs):
        report.corpus_lines += 1
        status = out["status"]
        if status == "error":
            report.errors.append({"line": out["line"], "message": out["message"]})
            continue
        if status == "skip":
            report.skipped += 1
            continue
        if status == "timeout":
            report.timeouts.append(_entry(out))
            continue
        report.total += 1
        if status == "violation":
            report.violations.append(_entry(out, "observed", "bound"))
        elif status == "exception":
            report.exceptions_found.append(_entry(out, "observed", "bound", "match"))
        else:
            report.conforming += 1
            if out.get("extremal"):
                report.extremal.append(_entry(out, "observed", "bound"))
            if out.get("equality"):
                report.ratio_equality.append(_entry(out, "observed", "bound"))
            if out.get("over"):
                report.over_bound.append(_entry(out, "observed", "bound"))
    for name in ("violations", "exceptions_found", "extremal", "over_bound",
                 "ratio_equality", "timeouts"):
        getattr(report, name).sort(key=lambda e: e["graph6"])
    report.errors.sort(key=lambda e: e["line"])
    if suite == "largedom":
        matches = sorted(e["match"] for e in report.exceptions_found)
        report.summary = {
            "gamma_five": len(report.exceptions_found) + sum(
                1 for v in report.violations if v["observed"] == 5),
            "catalog_matches": matches,
            "all_four_distinct": matches == sorted(g.value for g in GAMMA_FIVE_AT_14),
        }
    elif suite in _EXCEPTIONS:
        report.summary = {"exception_matches": sorted(e["match"] for e in report.exceptions_found)}
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    return report


def check_largedom(corpus: Iterable, jobs: int = 1, timeout_ms: int | None = None) -> Report:
    """Connected cubic graphs of order 14 with gamma = 5, matched against the catalog."""
    return check_bounds(corpus, "largedom", jobs, timeout_ms)


def scan_extremal(corpus: Iterable, jobs: int = 1, timeout_ms: int | None = None) -> Report:
    """List graphs at or above floor(5n/14), and those with 14 * gamma = 5n exactly."""
    return check_bounds(corpus, "extremal", jobs, timeout_ms)


def gp_formula(p: int) -> int:
    return p - p // 5 - (p + 2) // 5


def check_gp_formula(p_min: int, p_max: int) -> Report:
    """Compare exact gamma(P(p, 2)) with p - floor(p/5) - floor((p+2)/5).

    For p = 3, 4 the inner edges collapse (P(3,2) is the prism, P(4,2) has
    inner vertices of degree 2); the simple graph is used as is.
    """
    if not 3 <= p_min <= p_max <= GP_MAX_P:
        raise ValueError(f"need 3 <= p_min <= p_max <= {GP_MAX_P}, got {p_min}..{p_max}")
    start = time.monotonic()
    report = Report(f"gp:{p_min}:{p_max}")
    coincident = []
    for p in range(p_min, p_max + 1):
        g = _petersen_like(p, 2)
        exact = gamma_exact(g).value
        formula = gp_formula(p)
        floor57 = 5 * p // 7
        row = {"p": p, "n": 2 * p, "graph6": write_graph6(g).decode("ascii"),
               "exact": exact, "formula": formula, "floor_5p_7": floor57}
        report.rows.append(row)
        report.total += 1
        if formula == floor57:
            coincident.append(p)
        problems = []
        if exact != formula:
            problems.append("exact != formula")
        if p in GP_COINCIDENT and formula != floor57:
            problems.append("formula != floor(5p/7)")
        if problems:
            report.violations.append({"graph6": row["graph6"], "p": p, "observed": exact,
                                      "bound": formula, "problem": "; ".join(problems)})
        else:
            report.conforming += 1
    report.summary = {"coincident_p": coincident}
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    return report
