"""Vertex replication: add, for each chosen vertex, a closed twin.

Replicating a set W adds one clone per member, adjacent to its original,
to all the original's neighbours, and to clones of adjacent members.  The
result does not depend on the order in which members are processed; the
canonical naming below makes that an equality of adjacency structures, not
just an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gallai import GallaiGraph
from .graphs import Graph


@dataclass(frozen=True)
class ReplicatedGraph:
    """Result of replicating ``replicated`` inside ``base``.

    The clone of the k-th smallest replicated vertex gets index
    ``base.n + k``, after all original indices.
    """

    base: Graph
    graph: Graph
    replicated: tuple[int, ...]

    def clone_index(self, w: int) -> int:
        return self.base.n + self.replicated.index(w)

    def original_of(self, v: int) -> int:
        """The original behind ``v`` (identity on non-clones)."""
        if v < self.base.n:
            return v
        return self.replicated[v - self.base.n]

    def is_clone(self, v: int) -> bool:
        return v >= self.base.n

    def clone_items(self) -> list[tuple[int, int]]:
        """(clone index, original index) pairs in index order."""
        return [(self.base.n + k, w) for k, w in enumerate(self.replicated)]


def replicate(g: Graph, w: Iterable[int]) -> ReplicatedGraph:
    """Replicate the vertex set ``w`` in ``g``."""
    members = tuple(sorted(set(w)))
    if members and (members[0] < 0 or members[-1] >= g.n):
        raise ValueError("replication set out of range")
    n0 = g.n
    n1 = n0 + len(members)
    masks = [m for m in g.adj] + [0] * len(members)
    for k, orig in enumerate(members):
        c = n0 + k
        # clone adjacency among originals: closed neighbourhood of the original
        nbhd = g.adj[orig] | 1 << orig
        masks[c] |= nbhd
        for u in range(n0):
            if nbhd >> u & 1:
                masks[u] |= 1 << c
        # clone-clone edges mirror original-original edges
        for k2 in range(k):
            if g.adj[orig] >> members[k2] & 1:
                masks[c] |= 1 << (n0 + k2)
                masks[n0 + k2] |= 1 << c
    graph = Graph.from_adjacency(masks)
    assert graph.n == n1
    return ReplicatedGraph(base=g, graph=graph, replicated=members)


def _require_gallai_base(h: GallaiGraph, rg: ReplicatedGraph) -> None:
    if rg.base != h.graph:
        raise ValueError("replicated graph was not built from this base graph")


def clique_x(h: GallaiGraph, rg: ReplicatedGraph, i: int) -> tuple[int, ...]:
    """Column ``i`` of the base together with its clones (a clique)."""
    _require_gallai_base(h, rg)
    col = h.column(i)
    verts = list(col) + [rg.clone_index(v) for v in col if v in rg.replicated]
    return tuple(sorted(verts))


def segment_y(h: GallaiGraph, rg: ReplicatedGraph, i: int) -> tuple[int, ...]:
    """Vertices of columns ``i`` and ``i+1 mod n`` with their clones."""
    _require_gallai_base(h, rg)
    return tuple(sorted(set(clique_x(h, rg, i)) | set(clique_x(h, rg, (i + 1) % h.n))))
