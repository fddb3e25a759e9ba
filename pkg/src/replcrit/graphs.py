"""Undirected loop-free graphs on small vertex sets, with graph6 I/O.

Adjacency is stored as one Python int bitmask per vertex, so every graph
fits in a handful of machine words and neighbourhood operations are single
bitwise ops.  Graphs are immutable after construction; derived graphs
(induced subgraphs, vertex/edge deletions) are new objects.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
LONGEST_PATH_CAP = 24


class Graph6Error(ValueError):
    """Raised for malformed graph6 text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected graph on vertices ``0..n-1`` without loops."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, masks: Sequence[int]) -> "Graph":
        """Build a graph from per-vertex neighbour bitmasks (validated)."""
        g = cls.__new__(cls)
        n = len(masks)
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} exceeds {MAX_VERTICES}")
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full:
                raise ValueError(f"adjacency of vertex {v} references missing vertices")
            if m >> v & 1:
                raise ValueError(f"loop at vertex {v} not allowed")
        for v, m in enumerate(masks):
            for u in bits(m):
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g.n = n
        g.adj = tuple(masks)
        return g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask."""
        return self.adj[v]

    def neighbor_list(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted pairs, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Subgraph on ``keep``; result vertex ``i`` is the i-th smallest kept index."""
        kept = sorted(set(keep))
        if kept and (kept[0] < 0 or kept[-1] >= self.n):
            raise ValueError("vertex index out of range")
        pos = {v: i for i, v in enumerate(kept)}
        masks = [0] * len(kept)
        for v in kept:
            m = 0
            for u in bits(self.adj[v]):
                if u in pos:
                    m |= 1 << pos[u]
            masks[pos[v]] = m
        return Graph.from_adjacency(masks)

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v``; vertices above it shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge ({u},{v})")
        masks = list(self.adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph.from_adjacency(masks)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_adjacency(
            [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)]
        )


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def longest_path_order(g: Graph) -> int:
    """Number of vertices on a longest simple path of ``g``, found exactly.

    Exhaustive DFS over simple paths; intended for graphs up to
    LONGEST_PATH_CAP vertices (the inputs here are tiny and sparse).
    """
    if g.n > LONGEST_PATH_CAP:
        raise ValueError(f"graph too large for exact path search ({g.n} > {LONGEST_PATH_CAP})")
    adj = g.adj
    best = 0

    def extend(v: int, visited: int, length: int) -> None:
        nonlocal best
        if length > best:
            best = length
        rest = adj[v] & ~visited
        while rest:
            low = rest & -rest
            rest ^= low
            extend(low.bit_length() - 1, visited | low, length + 1)

    for s in range(g.n):
        extend(s, 1 << s, 1)
    return best


# --- graph6 ---------------------------------------------------------------
#
# Standard format: byte n+63 encodes the vertex count (n <= 62), followed by
# the upper triangle of the adjacency matrix in column-major order, packed
# big-endian into 6-bit groups, each stored as one byte offset by 63.

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("multi-byte vertex counts (>62 vertices) not supported")
    n = first - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"invalid size character {line[0]!r}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[1:]
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} data characters for {n} vertices, got {len(body)}"
        )
    stream = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"character {ch!r} out of graph6 range")
        stream = stream << 6 | val
    pad = nchars * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    stream >>= pad
    edges = []
    # bits come most-significant first: column j = 1..n-1, row i = 0..j-1
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError(f"graph6 single-byte form caps at 62 vertices (got {g.n})")
    n = g.n
    stream = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            stream = stream << 1 | (g.adj[i] >> j & 1)
            nbits += 1
    pad = (6 - nbits % 6) % 6
    stream <<= pad
    nchars = (nbits + pad) // 6
    chars = []
    for k in range(nchars - 1, -1, -1):
        chars.append(chr((stream >> (6 * k) & 63) + 63))
    return chr(n + 63) + "".join(chars)


def read_graph6_lines(text: str) -> list[str]:
    """Split corpus text into candidate graph6 lines, dropping blanks."""
    return [ln.strip() for ln in text.splitlines() if ln.strip()]
