"""Corpus scanning: run the replication-conjecture check over graph6 files."""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Optional

from .coloring import criticality
from .graphs import Graph6Error, parse_graph6, read_graph6_lines
from .theorem import conjecture_check


@dataclass
class ScanEntry:
    line: int
    graph6: str
    vertices: Optional[int] = None
    error: Optional[str] = None
    skipped: Optional[str] = None
    edge_critical: Optional[bool] = None
    holds: Optional[bool] = None
    witness: Optional[list[int]] = None
    subsets_checked: Optional[int] = None
    seconds: float = 0.0

    def is_counterexample(self) -> bool:
        return self.holds is False


@dataclass
class ScanReport:
    k: int
    filter_edge_critical: bool
    corpus_sha256: str
    entries: list[ScanEntry] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)


def _scan_one(args: tuple[int, str, int, bool]) -> ScanEntry:
    line_no, line, k, filter_edge_critical = args
    entry = ScanEntry(line=line_no, graph6=line)
    start = time.monotonic()
    try:
        g = parse_graph6(line)
        entry.vertices = g.n
        if filter_edge_critical:
            report = criticality(g, k, edges=True)
            entry.edge_critical = report.is_edge_critical
            if not report.is_edge_critical:
                entry.skipped = f"not {k}-edge-critical (chi={report.chi})"
                return entry
        result = conjecture_check(g, k)
        entry.holds = result.holds
        entry.witness = list(result.witness) if result.witness is not None else None
        entry.subsets_checked = result.subsets_checked
    except Graph6Error as exc:
        entry.error = f"parse error: {exc}"
    except ValueError as exc:
        entry.skipped = str(exc)
    finally:
        entry.seconds = round(time.monotonic() - start, 3)
    return entry


def scan_corpus(
    text: str, k: int, filter_edge_critical: bool = False, jobs: int = 1
) -> ScanReport:
    """Check every graph6 line of ``text`` against the replication
    conjecture at level ``k``.

    Parse failures and precondition failures are recorded per line and the
    scan continues.  Output order follows the input regardless of ``jobs``.
    """
    lines = read_graph6_lines(text)
    report = ScanReport(
        k=k,
        filter_edge_critical=filter_edge_critical,
        corpus_sha256=hashlib.sha256(text.encode()).hexdigest(),
    )
    tasks = [(i + 1, line, k, filter_edge_critical) for i, line in enumerate(lines)]
    if max(1, jobs) == 1:
        entries = [_scan_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs, mp_context=get_context("fork")
        ) as pool:
            entries = list(pool.map(_scan_one, tasks))
    report.entries = entries
    report.counterexamples = [e.graph6 for e in entries if e.is_counterexample()]
    return report
