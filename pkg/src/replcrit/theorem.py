"""End-to-end verification drivers.

For each vertex subset W of the n-column Gallai graph, the replicated graph
must fail to be 5-critical.  Three structural conditions (enough clones in
one column; nearly all of row 0 with n odd; a long path outside row 0 with
n even) force chromatic number at least 5 while leaving a deletable vertex;
every other subset extends to a full one-per-column selection whose sign
sequence admits a good stroll, hence a proper 4-colouring.  Both the
constructive route and the exact solver route are implemented and can be
cross-checked subset by subset.

A second driver decides, for an arbitrary vertex-critical graph, whether
some replication set produces a critically chromatic graph one level up.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from multiprocessing import get_context
from typing import Iterable, Optional, Sequence

from .coloring import (
    Coloring,
    CriticalityReport,
    chromatic_number,
    coloring_violation,
    criticality,
    greedy_clique,
    is_k_colorable,
)
from .gallai import GallaiGraph
from .graphs import Graph, longest_path_order
from .replication import ReplicatedGraph, clique_x, replicate
from .signseq import encode_sigma, format_sigma
from .strolls import GOOD_END, START, find_stroll, synthesize_coloring


class FalsificationError(RuntimeError):
    """A certified claim failed; the verification must report it loudly."""


MAX_CONJECTURE_VERTICES = 16


@dataclass(frozen=True)
class CaseVerdict:
    """Which structural condition a subset satisfies, with its witness."""

    case: str  # "A", "B", "C" or "none"
    column: Optional[int] = None
    row0_count: Optional[int] = None
    path_order: Optional[int] = None


def classify_structural_case(h: GallaiGraph, w: Iterable[int]) -> CaseVerdict:
    """Evaluate the three conditions in priority order A, B, C."""
    wset = frozenset(w)
    n = h.n
    for i in range(n):
        if sum(1 for v in h.column(i) if v in wset) >= 2:
            return CaseVerdict(case="A", column=i)
    row0 = set(h.row(0))
    r0_count = len(wset & row0)
    if n % 2 == 1 and r0_count >= n - 1:
        return CaseVerdict(case="B", row0_count=r0_count)
    if n % 2 == 0:
        outside = sorted(wset - row0)
        if outside:
            order = longest_path_order(h.graph.induced_subgraph(outside))
            if order >= n:
                return CaseVerdict(case="C", path_order=order)
    return CaseVerdict(case="none")


def complete_selection(h: GallaiGraph, w: Iterable[int]) -> tuple[int, ...]:
    """Grow a condition-free subset to one vertex per column, still
    condition-free.

    Empty columns are filled left to right with the row-0 vertex, falling
    back to row 1 exactly when row 0 would trigger a condition.  The result
    is re-checked, not trusted.
    """
    wset = set(w)
    if classify_structural_case(h, wset).case != "none":
        raise ValueError("subset already satisfies one of the structural conditions")
    rows: list[int] = []
    for i in range(h.n):
        present = [v for v in h.column(i) if v in wset]
        if present:
            rows.append(h.name(present[0])[1])
            continue
        choice = h.vertex(i, 0)
        if classify_structural_case(h, wset | {choice}).case != "none":
            choice = h.vertex(i, 1)
        wset.add(choice)
        rows.append(h.name(choice)[1])
    final = classify_structural_case(h, wset)
    if final.case != "none":
        raise FalsificationError(
            f"greedy completion produced a case-{final.case} selection"
        )
    return tuple(rows)


def constructive_coloring(
    h: GallaiGraph, w: Iterable[int]
) -> tuple[ReplicatedGraph, Coloring]:
    """A proper 4-colouring of the replication of a condition-free subset.

    The subset is completed to a full selection, the selection's sign
    sequence is searched for a good stroll, the stroll is turned into a
    colouring of the completed replication, and that colouring is restricted
    back to the requested one.  A missing stroll is a falsification event,
    never a silent fallback.
    """
    w = tuple(sorted(set(w)))
    rows = complete_selection(h, w)
    sigma = encode_sigma(rows)
    stroll = find_stroll(sigma, START, GOOD_END)
    if stroll is None:
        raise FalsificationError(
            f"no good stroll for sign sequence {format_sigma(sigma)} "
            f"of the completed selection; the 4-colourability claim fails"
        )
    rg_full, full_coloring = synthesize_coloring(h, rows, stroll)
    rg = replicate(h.graph, w)
    colors = []
    for v in range(rg.graph.n):
        if rg.is_clone(v):
            colors.append(full_coloring.colors[rg_full.clone_index(rg.original_of(v))])
        else:
            colors.append(full_coloring.colors[v])
    restricted = Coloring(tuple(colors), 4)
    reason = coloring_violation(rg.graph, restricted)
    if reason is not None:
        raise FalsificationError(f"restricted colouring is improper: {reason}")
    return rg, restricted


# --- not-5-critical certificates -------------------------------------------


def _shift_after_deletion(verts: Sequence[int], deleted: int) -> list[int]:
    return [v - 1 if v > deleted else v for v in verts]


def _deletion_witness(
    g: Graph, k: int, clique: Sequence[int]
) -> Optional[int]:
    """A vertex whose deletion leaves the graph non-k-colourable, or None.

    Vertices outside the supplied clique are tried first: there the clique
    survives the deletion and certifies the bound immediately when it has
    more than k vertices.
    """
    outside = [v for v in range(g.n) if v not in set(clique)]
    inside = sorted(set(clique))
    for v in outside + inside:
        hint = _shift_after_deletion([u for u in clique if u != v], v)
        if is_k_colorable(g.delete_vertex(v), k, clique=hint) is None:
            return v
    return None


@dataclass(frozen=True)
class SubsetResult:
    """Verdict for one replication set."""

    w: tuple[int, ...]
    case: str
    chi: Optional[int]
    chi_lower: Optional[int]
    chi_upper: Optional[int]
    five_critical: bool
    certificate: dict
    source: str


def _constructive_subset(
    h: GallaiGraph, w: tuple[int, ...], verdict: CaseVerdict
) -> SubsetResult:
    rg = replicate(h.graph, w)
    g = rg.graph
    if verdict.case == "none":
        constructive_coloring(h, w)  # raises FalsificationError when the route fails
        return SubsetResult(
            w=w,
            case="none",
            chi=None,
            chi_lower=None,
            chi_upper=4,
            five_critical=False,
            certificate={"kind": "four_coloring", "route": "stroll"},
            source="stroll",
        )
    if verdict.case == "A":
        clique = clique_x(h, rg, verdict.column)
    else:
        clique = greedy_clique(g)
    if is_k_colorable(g, 4, clique=clique) is not None:
        raise FalsificationError(
            f"case-{verdict.case} subset {w} produced a 4-colourable replication"
        )
    witness = _deletion_witness(g, 4, clique)
    if witness is not None:
        return SubsetResult(
            w=w,
            case=verdict.case,
            chi=None,
            chi_lower=5,
            chi_upper=None,
            five_critical=False,
            certificate={"kind": "vertex_deletion", "vertex": witness},
            source="solver",
        )
    # no deletable vertex: 5-critical unless the chromatic number exceeds 5
    chi, _ = chromatic_number(g)
    if chi == 5:
        return SubsetResult(
            w=w,
            case=verdict.case,
            chi=5,
            chi_lower=5,
            chi_upper=5,
            five_critical=True,
            certificate={"kind": "five_critical"},
            source="solver",
        )
    return SubsetResult(
        w=w,
        case=verdict.case,
        chi=chi,
        chi_lower=chi,
        chi_upper=chi,
        five_critical=False,
        certificate={"kind": "chi_not_five", "chi": chi},
        source="solver",
    )


def _solver_subset(
    h: GallaiGraph, w: tuple[int, ...], verdict: CaseVerdict
) -> SubsetResult:
    rg = replicate(h.graph, w)
    g = rg.graph
    clique = greedy_clique(g)
    chi, _ = chromatic_number(g, clique=clique)
    if chi != 5:
        return SubsetResult(
            w=w,
            case=verdict.case,
            chi=chi,
            chi_lower=chi,
            chi_upper=chi,
            five_critical=False,
            certificate={"kind": "chi_not_five", "chi": chi},
            source="solver",
        )
    witness = _deletion_witness(g, 4, clique)
    if witness is None:
        return SubsetResult(
            w=w,
            case=verdict.case,
            chi=5,
            chi_lower=5,
            chi_upper=5,
            five_critical=True,
            certificate={"kind": "five_critical"},
            source="solver",
        )
    return SubsetResult(
        w=w,
        case=verdict.case,
        chi=5,
        chi_lower=5,
        chi_upper=5,
        five_critical=False,
        certificate={"kind": "vertex_deletion", "vertex": witness},
        source="solver",
    )


def _audit_selected(seed: int, n: int, mask: int, rate: float) -> bool:
    digest = hashlib.sha256(f"{seed}:{n}:{mask}".encode()).digest()
    return int.from_bytes(digest[:8], "big") < rate * 2**64


@dataclass
class TheoremReport:
    n: int
    mode: str
    subset_count: int
    case_counts: dict[str, int]
    five_critical: list[tuple[int, ...]]
    disagreements: list[dict]
    falsifications: list[dict]
    audited: int
    entries: list[SubsetResult]
    entries_policy: str
    passed: bool


def _masks_by_size(nv: int) -> Iterable[tuple[int, ...]]:
    for size in range(nv + 1):
        yield from combinations(range(nv), size)


def _verify_subsets(
    n: int,
    mode: str,
    subsets: list[tuple[int, ...]],
    seed: int,
    audit_rate: float,
    keep_all: bool,
) -> dict:
    h = GallaiGraph(n)
    case_counts = {"A": 0, "B": 0, "C": 0, "none": 0}
    entries: list[SubsetResult] = []
    five_critical: list[tuple[int, ...]] = []
    disagreements: list[dict] = []
    falsifications: list[dict] = []
    audited = 0
    for w in subsets:
        verdict = classify_structural_case(h, w)
        case_counts[verdict.case] += 1
        keep = keep_all or verdict.case in ("B", "C")
        result = None
        try:
            if mode in ("constructive", "both"):
                result = _constructive_subset(h, w, verdict)
            solver_result = None
            if mode in ("solver", "both"):
                solver_result = _solver_subset(h, w, verdict)
                if mode == "both":
                    ok = (verdict.case != "none") == (solver_result.chi >= 5)
                    same_verdict = result.five_critical == solver_result.five_critical
                    if not (ok and same_verdict):
                        disagreements.append(
                            {
                                "w": list(w),
                                "case": verdict.case,
                                "solver_chi": solver_result.chi,
                                "constructive_five_critical": result.five_critical,
                                "solver_five_critical": solver_result.five_critical,
                            }
                        )
                        keep = True
                    result = SubsetResult(
                        w=w,
                        case=verdict.case,
                        chi=solver_result.chi,
                        chi_lower=solver_result.chi,
                        chi_upper=solver_result.chi,
                        five_critical=result.five_critical or solver_result.five_critical,
                        certificate=solver_result.certificate,
                        source="both",
                    )
                else:
                    result = solver_result
            if (
                mode == "constructive"
                and verdict.case == "none"
                and _audit_selected(seed, n, _w_mask(w), audit_rate)
            ):
                audited += 1
                keep = True
                chi, _ = chromatic_number(replicate(h.graph, w).graph)
                if chi != 4:
                    disagreements.append(
                        {"w": list(w), "case": "none", "audit_chi": chi}
                    )
        except FalsificationError as exc:
            falsifications.append({"w": list(w), "error": str(exc)})
            result = SubsetResult(
                w=w,
                case=verdict.case,
                chi=None,
                chi_lower=None,
                chi_upper=None,
                five_critical=False,
                certificate={"kind": "falsification", "error": str(exc)},
                source="error",
            )
            keep = True
        if result.five_critical:
            five_critical.append(w)
            keep = True
        if keep:
            entries.append(result)
    return {
        "case_counts": case_counts,
        "entries": entries,
        "five_critical": five_critical,
        "disagreements": disagreements,
        "falsifications": falsifications,
        "audited": audited,
    }


def _w_mask(w: tuple[int, ...]) -> int:
    m = 0
    for v in w:
        m |= 1 << v
    return m


def _chunk_worker(args: tuple) -> dict:
    return _verify_subsets(*args)


def verify_theorem(
    n: int,
    mode: str = "both",
    jobs: int = 1,
    seed: int = 0,
    audit_rate: float = 0.01,
    detail: str = "auto",
) -> TheoremReport:
    """Check every replication set of the n-column graph for 5-criticality.

    Modes: ``constructive`` (classifier plus strolls, solver only on the
    structural cases and a random audit), ``solver`` (exact chromatic
    computations throughout), ``both`` (run and cross-check the two).
    Exhaustive over all 2^(3n) subsets; n is capped accordingly.
    """
    if mode not in ("constructive", "solver", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 4:
        raise ValueError(f"construction requires n >= 4 (got {n})")
    if n > 6:
        raise ValueError("exhaustive subset scan is capped at n = 6")
    keep_all = detail == "full" or (detail == "auto" and n <= 4)
    subsets = list(_masks_by_size(3 * n))
    jobs = max(1, jobs)
    if jobs == 1:
        parts = [_verify_subsets(n, mode, subsets, seed, audit_rate, keep_all)]
    else:
        chunk = (len(subsets) + jobs - 1) // jobs
        tasks = [
            (n, mode, subsets[i : i + chunk], seed, audit_rate, keep_all)
            for i in range(0, len(subsets), chunk)
        ]
        with ProcessPoolExecutor(
            max_workers=jobs, mp_context=get_context("fork")
        ) as pool:
            parts = list(pool.map(_chunk_worker, tasks))
    case_counts = {"A": 0, "B": 0, "C": 0, "none": 0}
    entries: list[SubsetResult] = []
    five_critical: list[tuple[int, ...]] = []
    disagreements: list[dict] = []
    falsifications: list[dict] = []
    audited = 0
    for part in parts:
        for key in case_counts:
            case_counts[key] += part["case_counts"][key]
        entries.extend(part["entries"])
        five_critical.extend(part["five_critical"])
        disagreements.extend(part["disagreements"])
        falsifications.extend(part["falsifications"])
        audited += part["audited"]
    passed = not five_critical and not disagreements and not falsifications
    return TheoremReport(
        n=n,
        mode=mode,
        subset_count=len(subsets),
        case_counts=case_counts,
        five_critical=five_critical,
        disagreements=disagreements,
        falsifications=falsifications,
        audited=audited,
        entries=entries,
        entries_policy="full" if keep_all else "cases+audit",
        passed=passed,
    )


# --- the replication conjecture on arbitrary graphs ------------------------


@dataclass
class ConjectureResult:
    holds: bool
    k: int
    witness: Optional[tuple[int, ...]]
    subsets_checked: int
    witness_report: Optional[CriticalityReport] = None


def conjecture_check(
    g: Graph, k: int, max_vertices: int = MAX_CONJECTURE_VERTICES
) -> ConjectureResult:
    """Search for a replication set whose replication is (k+1)-critical.

    The input must be k-vertex-critical (verified first).  Subsets are
    scanned in order of size; the first witness is re-verified with a full
    criticality report before being returned.
    """
    if g.n > max_vertices:
        raise ValueError(
            f"subset scan needs 2^n work; capped at {max_vertices} vertices (got {g.n})"
        )
    base = criticality(g, k)
    if not base.is_vertex_critical:
        raise ValueError(
            f"input graph is not {k}-vertex-critical (chi={base.chi}, "
            f"deletions={sorted(set(base.per_vertex_chi))})"
        )
    checked = 0
    for w in _masks_by_size(g.n):
        checked += 1
        rg = replicate(g, w)
        clique = greedy_clique(rg.graph)
        if len(clique) > k + 1:
            continue  # chromatic number exceeds k+1
        if is_k_colorable(rg.graph, k, clique=clique) is not None:
            continue  # still k-colourable
        if is_k_colorable(rg.graph, k + 1, clique=clique) is None:
            continue  # chromatic number at least k+2
        if _deletion_witness(rg.graph, k, clique) is not None:
            continue  # some deletion stays non-k-colourable
        report = criticality(rg.graph, k + 1)
        if not report.is_vertex_critical:
            raise FalsificationError(
                "subset scan and criticality report disagree on a witness"
            )
        return ConjectureResult(
            holds=True,
            k=k,
            witness=w,
            subsets_checked=checked,
            witness_report=report,
        )
    return ConjectureResult(holds=False, k=k, witness=None, subsets_checked=checked)
