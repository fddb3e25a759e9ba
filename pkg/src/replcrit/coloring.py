"""Exact k-colourability, chromatic number, and criticality decisions.

The solver is a DSATUR-ordered backtracking search over bitmask adjacency,
seeded with a greedily found clique to break colour symmetry and to give a
lower bound.  It is complete: a None answer means no proper k-colouring
exists.  Everything is deterministic, so identical inputs give identical
witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, bits

SOLVER_CAP = 64


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colours in 1..k."""

    colors: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class CriticalityReport:
    k: int
    chi: int
    per_vertex_chi: tuple[int, ...]
    per_edge_chi: Optional[tuple[int, ...]]
    edges: Optional[tuple[tuple[int, int], ...]]
    is_vertex_critical: bool
    is_edge_critical: Optional[bool]


def coloring_violation(g: Graph, c: Coloring) -> Optional[str]:
    """Reason the colouring is improper, or None if it is proper."""
    if len(c.colors) != g.n:
        return f"{len(c.colors)} colours for {g.n} vertices"
    for v, col in enumerate(c.colors):
        if not 1 <= col <= c.k:
            return f"vertex {v} has colour {col} outside 1..{c.k}"
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            if c.colors[u] == c.colors[v]:
                return f"edge ({u},{v}) is monochromatic (colour {c.colors[u]})"
    return None


def validate_coloring(g: Graph, c: Coloring) -> bool:
    return coloring_violation(g, c) is None


def is_clique(g: Graph, verts: Sequence[int]) -> bool:
    vs = list(verts)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """A large clique found by multi-start greedy extension (deterministic)."""
    best: tuple[int, ...] = ()
    adj = g.adj
    for s in range(g.n):
        clique = [s]
        cand = adj[s]
        while cand:
            # pick the candidate with most neighbours among the candidates
            pick, pick_score = -1, -1
            rest = cand
            while rest:
                low = rest & -rest
                rest ^= low
                u = low.bit_length() - 1
                score = (adj[u] & cand).bit_count()
                if score > pick_score:
                    pick, pick_score = u, score
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = tuple(sorted(clique))
    return best


def is_k_colorable(
    g: Graph, k: int, clique: Optional[Sequence[int]] = None
) -> Optional[Coloring]:
    """A proper k-colouring of ``g``, or None if there is none (complete).

    ``clique`` optionally supplies a known clique; it is verified and then
    used both as a lower bound (more than k vertices means unsatisfiable)
    and as a symmetry-breaking pre-colouring.
    """
    if g.n > SOLVER_CAP:
        raise ValueError(f"graph too large for the exact solver ({g.n} > {SOLVER_CAP})")
    if k < 0:
        raise ValueError("palette size must be non-negative")
    if g.n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    if clique is None:
        clique = greedy_clique(g)
    elif not is_clique(g, clique):
        raise ValueError("supplied vertex set is not a clique")
    if len(clique) > k:
        return None

    n = g.n
    adj = g.adj
    colors = [0] * n
    # neighbour colour masks: bit c-1 set when some neighbour has colour c
    nbr = [0] * n
    used = 0
    for v in sorted(clique):
        used += 1
        colors[v] = used
        cbit = 1 << (used - 1)
        for u in bits(adj[v]):
            nbr[u] |= cbit
    uncolored = [v for v in range(n) if colors[v] == 0]
    if not uncolored:
        return Coloring(tuple(colors), k)

    def pick() -> int:
        # max saturation, then max degree, then min index
        best_v, best_key = -1, (-1, -1, 0)
        for v in uncolored:
            if colors[v]:
                continue
            key = (nbr[v].bit_count(), adj[v].bit_count(), -v)
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def assign(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        v = pick()
        # allow existing colours plus at most one fresh colour
        limit = min(k, used + 1)
        avail = ~nbr[v] & ((1 << limit) - 1)
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length()
            colors[v] = c
            touched = []
            for u in bits(adj[v]):
                if not nbr[u] & low:
                    nbr[u] |= low
                    touched.append(u)
            if assign(remaining - 1, max(used, c)):
                return True
            colors[v] = 0
            for u in touched:
                nbr[u] ^= low
        return False

    if assign(len(uncolored), used):
        return Coloring(tuple(colors), k)
    return None


def chromatic_number(
    g: Graph, clique: Optional[Sequence[int]] = None
) -> tuple[int, Coloring]:
    """Least k admitting a proper colouring, with a witness."""
    if g.n == 0:
        return 0, Coloring((), 0)
    if clique is None:
        clique = greedy_clique(g)
    k = max(1, len(clique))
    while True:
        witness = is_k_colorable(g, k, clique=clique)
        if witness is not None:
            return k, witness
        k += 1


def criticality(g: Graph, k: int, edges: bool = False) -> CriticalityReport:
    """Exact chi for the graph and all single deletions, with verdicts."""
    chi, _ = chromatic_number(g)
    per_vertex = tuple(chromatic_number(g.delete_vertex(v))[0] for v in range(g.n))
    is_vc = chi == k and all(c == k - 1 for c in per_vertex)
    per_edge = None
    edge_list = None
    is_ec = None
    if edges:
        edge_list = tuple(g.edges())
        per_edge = tuple(chromatic_number(g.delete_edge(u, v))[0] for u, v in edge_list)
        # every proper subgraph (k-1)-colourable: all maximal ones are the
        # single-edge deletions plus deletions of isolated vertices, so the
        # vertex row is part of the verdict as well
        is_ec = (
            chi == k
            and all(c == k - 1 for c in per_edge)
            and all(c <= k - 1 for c in per_vertex)
        )
    return CriticalityReport(
        k=k,
        chi=chi,
        per_vertex_chi=per_vertex,
        per_edge_chi=per_edge,
        edges=edge_list,
        is_vertex_critical=is_vc,
        is_edge_critical=is_ec,
    )
