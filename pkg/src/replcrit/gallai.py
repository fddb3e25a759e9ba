"""Gallai's 4-regular 4-edge-critical graphs.

The graph on n >= 4 columns is the Cartesian product of a path on n
vertices with a triangle, closed up by three "twist" edges that join
column 0 to column n-1 with the triangle rows negated.  Vertices are
addressed either by flat index or by (column, row) with rows in Z_3.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .graphs import Graph


class GallaiGraph:
    """The n-column triangle stack with twisted wrap-around edges.

    Vertex (i, j) gets flat index 3*i + j, so the numbering (and hence
    graph6 output) is reproducible.
    """

    __slots__ = ("n", "graph")

    def __init__(self, n: int):
        if n < 4:
            raise ValueError(f"construction requires n >= 4 (got {n})")
        self.n = n
        edges = []
        for i in range(n):
            edges += [(3 * i, 3 * i + 1), (3 * i, 3 * i + 2), (3 * i + 1, 3 * i + 2)]
        for i in range(n - 1):
            for j in range(3):
                edges.append((3 * i + j, 3 * (i + 1) + j))
        for j in range(3):
            edges.append((j, 3 * (n - 1) + (-j) % 3))
        self.graph = Graph(3 * n, edges)

    def vertex(self, i: int, j: int) -> int:
        """Flat index of the vertex in column ``i``, row ``j`` (mod 3)."""
        if not 0 <= i < self.n:
            raise ValueError(f"column {i} out of range")
        return 3 * i + j % 3

    def name(self, v: int) -> tuple[int, int]:
        """(column, row) of flat index ``v``."""
        if not 0 <= v < 3 * self.n:
            raise ValueError(f"vertex {v} out of range")
        return divmod(v, 3)

    def column(self, i: int) -> tuple[int, int, int]:
        if not 0 <= i < self.n:
            raise ValueError(f"column {i} out of range")
        return (3 * i, 3 * i + 1, 3 * i + 2)

    def row(self, j: int) -> tuple[int, ...]:
        j %= 3
        return tuple(3 * i + j for i in range(self.n))

    def verify_automorphism(self, mapping: Sequence[int]) -> bool:
        """True iff ``mapping`` permutes the vertices preserving adjacency.

        Edges must map to edges and non-edges to non-edges; a non-bijective
        mapping is rejected with ValueError.
        """
        g = self.graph
        if sorted(mapping) != list(range(g.n)):
            raise ValueError("mapping is not a bijection on the vertex set")
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.has_edge(u, v) != g.has_edge(mapping[u], mapping[v]):
                    return False
        return True


_W_ITEM = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")


def parse_w_literal(h: GallaiGraph, text: str) -> tuple[int, ...]:
    """Parse a vertex-set literal like ``"0,0;1,2"`` into sorted flat indices.

    Items are ``column,row`` pairs separated by semicolons; the empty string
    denotes the empty set.
    """
    text = text.strip()
    if not text:
        return ()
    out = set()
    for item in text.split(";"):
        m = _W_ITEM.match(item)
        if not m:
            raise ValueError(f"bad vertex literal {item!r} (expected 'column,row')")
        i, j = int(m.group(1)), int(m.group(2))
        if j > 2:
            raise ValueError(f"row {j} out of Z_3 in {item!r}")
        out.add(h.vertex(i, j))
    return tuple(sorted(out))


def format_w_literal(h: GallaiGraph, w: Iterable[int]) -> str:
    return ";".join(f"{i},{j}" for i, j in (h.name(v) for v in sorted(set(w))))


def format_vertex_name(h: GallaiGraph, i: int, j: int, clone: bool = False) -> str:
    return f"{i},{j}'" if clone else f"{i},{j}"
