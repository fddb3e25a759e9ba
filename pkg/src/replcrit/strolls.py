"""Patterns of 4-clique colourings, their compatibility automaton, and strolls.

A pattern is a cyclically ordered partition of the colours {1,2,3,4} into a
pair and two singletons; it records how a 4-clique spanning one column and
its clone is coloured, up to the order within the pair.  Twelve patterns
exist.  For each sign s in Z_3 the patterns that can appear on the next
column are given by a local move rule; the automaton D materializes that
rule as directed edges (signs +/-, with a loop at every vertex) and
undirected edges (sign 0).  A stroll is a walk in D following a sign
sequence; strolls between distinguished endpoint patterns translate
directly into proper 4-colourings of replicated column stacks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .coloring import Coloring, coloring_violation
from .gallai import GallaiGraph
from .replication import ReplicatedGraph, replicate
from .signseq import SignSequence, encode_sigma

# A pattern is ((p, q), a, b): pair part first (p < q), then the two
# singleton parts in cyclic order.
Pattern = tuple[tuple[int, int], int, int]


def make_pattern(pair: Sequence[int], first: int, second: int) -> Pattern:
    p, q = sorted(pair)
    parts = {p, q, first, second}
    if p == q or parts != {1, 2, 3, 4}:
        raise ValueError(f"parts do not partition the four colours: {pair}, {first}, {second}")
    return ((p, q), first, second)


def pattern_from_parts(parts: Sequence[Sequence[int]]) -> Pattern:
    """Canonicalize a cyclic triple of parts: rotate the pair to the front.

    Cyclic shifts of the same partition yield the same pattern.
    """
    if len(parts) != 3:
        raise ValueError("a pattern has exactly three parts")
    sized = [tuple(sorted(p)) for p in parts]
    pair_pos = [i for i, p in enumerate(sized) if len(p) == 2]
    if len(pair_pos) != 1 or any(len(p) != 1 for i, p in enumerate(sized) if i not in pair_pos):
        raise ValueError(f"parts must be one pair and two singletons: {parts}")
    i = pair_pos[0]
    return make_pattern(sized[i], sized[(i + 1) % 3][0], sized[(i + 2) % 3][0])


_PATTERN_RE = re.compile(r"^\[(\d)(\d)\](\d)(\d)$")


def parse_pattern(text: str) -> Pattern:
    m = _PATTERN_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad pattern literal {text!r} (expected like '[12]34')")
    p, q, a, b = (int(x) for x in m.groups())
    return make_pattern((p, q), a, b)


def format_pattern(p: Pattern) -> str:
    (x, y), a, b = p
    return f"[{x}{y}]{a}{b}"


ALL_PATTERNS: tuple[Pattern, ...] = tuple(
    sorted(
        make_pattern((p, q), a, b)
        for p in range(1, 5)
        for q in range(p + 1, 5)
        for a, b in ((r, s) for r in range(1, 5) for s in range(1, 5))
        if len({p, q, a, b}) == 4
    )
)

START = parse_pattern("[12]34")
GOOD_END = parse_pattern("[12]43")
REVERSING_END = parse_pattern("[34]12")


def reverse_pattern(p: Pattern) -> Pattern:
    """Reverse the cyclic order of the parts; an involution."""
    (x, y), a, b = p
    # cyclic order (pair, a, b) reversed is (pair, b, a)
    return ((x, y), b, a)


def relabel_pattern(p: Pattern, swap: tuple[int, int]) -> Pattern:
    """Apply a colour transposition to every part."""
    u, v = swap
    table = {u: v, v: u}
    (x, y), a, b = p
    f = lambda c: table.get(c, c)
    return make_pattern((f(x), f(y)), f(a), f(b))


@lru_cache(maxsize=None)
def compatible(p: Pattern, s: int) -> frozenset[Pattern]:
    """Patterns allowed on the next column when the row offset is ``s``.

    s = +1: the pattern itself, or a paired colour moved to the preceding
    part; s = -1: mirror (moved to the succeeding part); s = 0: the two
    unpaired colours become the pair, in either order.
    """
    (x, y), a, b = p
    s %= 3
    if s == 1:
        return frozenset(
            {p, make_pattern((b, x), y, a), make_pattern((b, y), x, a)}
        )
    if s == 2:
        return frozenset(
            {p, make_pattern((a, x), b, y), make_pattern((a, y), b, x)}
        )
    return frozenset({make_pattern((a, b), x, y), make_pattern((a, b), y, x)})


@dataclass(frozen=True)
class AutomatonD:
    """The 12-pattern compatibility automaton."""

    patterns: tuple[Pattern, ...]
    directed: frozenset[tuple[Pattern, Pattern]]  # includes the loops
    undirected: frozenset[tuple[Pattern, Pattern]]  # stored with both orders


@lru_cache(maxsize=1)
def build_d() -> AutomatonD:
    directed = set()
    undirected = set()
    for p in ALL_PATTERNS:
        for q in compatible(p, 1):
            directed.add((p, q))
        for q in compatible(p, 0):
            undirected.add((p, q))
            undirected.add((q, p))
    return AutomatonD(
        patterns=ALL_PATTERNS,
        directed=frozenset(directed),
        undirected=frozenset(undirected),
    )


@lru_cache(maxsize=None)
def step_targets(p: Pattern, s: int) -> frozenset[Pattern]:
    """Patterns reachable from ``p`` in one stroll step with sign ``s``."""
    s %= 3
    if s == 2:
        # backward along a directed edge: q such that p is +-compatible with q
        return frozenset(q for q in ALL_PATTERNS if p in compatible(q, 1))
    return compatible(p, s)


@dataclass(frozen=True)
class Stroll:
    """A walk in D following ``sigma``: one more pattern than signs."""

    sigma: SignSequence
    patterns: tuple[Pattern, ...]

    def start(self) -> Pattern:
        return self.patterns[0]

    def end(self) -> Pattern:
        return self.patterns[-1]


def is_valid_stroll(st: Stroll) -> bool:
    if len(st.patterns) != len(st.sigma) + 1:
        raise ValueError(
            f"{len(st.patterns)} patterns do not fit {len(st.sigma)} signs"
        )
    return all(
        st.patterns[j + 1] in step_targets(st.patterns[j], s)
        for j, s in enumerate(st.sigma)
    )


def find_stroll(sigma: Sequence[int], start: Pattern, end: Pattern) -> Optional[Stroll]:
    """The lexicographically least stroll for ``sigma`` between the endpoints,
    or None when no stroll exists.  Layered search over positions x patterns,
    complete by construction.
    """
    sigma = tuple(s % 3 for s in sigma)
    # backward reachability: can_reach[t] = patterns at position t that still
    # reach `end` at the final position
    can_reach = [set() for _ in range(len(sigma) + 1)]
    can_reach[-1].add(end)
    for t in range(len(sigma) - 1, -1, -1):
        for p in ALL_PATTERNS:
            if can_reach[t + 1] & step_targets(p, sigma[t]):
                can_reach[t].add(p)
    if start not in can_reach[0]:
        return None
    walk = [start]
    for t, s in enumerate(sigma):
        nxt = min(step_targets(walk[-1], s) & can_reach[t + 1])
        walk.append(nxt)
    return Stroll(sigma=sigma, patterns=tuple(walk))


@dataclass(frozen=True)
class SequenceClass:
    good: bool
    reversing: bool
    good_stroll: Optional[Stroll]
    reversing_stroll: Optional[Stroll]


def classify_sequence(sigma: Sequence[int]) -> SequenceClass:
    """Whether strolls exist from [12]34 to [12]43 (good) and to [34]12
    (reversing); a sequence may be both, and the flags are independent."""
    g = find_stroll(sigma, START, GOOD_END)
    r = find_stroll(sigma, START, REVERSING_END)
    return SequenceClass(
        good=g is not None, reversing=r is not None, good_stroll=g, reversing_stroll=r
    )


def stationary_stroll(sigma: Sequence[int], p: Pattern, r: Pattern) -> Stroll:
    """The stroll that sits still on nonzero signs and swaps between the
    endpoints of an undirected edge on zeros."""
    if (p, r) not in build_d().undirected:
        raise ValueError(
            f"{format_pattern(p)} and {format_pattern(r)} are not 0-compatible"
        )
    sigma = tuple(s % 3 for s in sigma)
    walk = [p]
    for s in sigma:
        if s == 0:
            walk.append(r if walk[-1] == p else p)
        else:
            walk.append(walk[-1])
    return Stroll(sigma=sigma, patterns=tuple(walk))


def compose(a: Stroll, b: Stroll) -> Stroll:
    if a.end() != b.start():
        raise ValueError(
            f"cannot compose: first stroll ends at {format_pattern(a.end())}, "
            f"second starts at {format_pattern(b.start())}"
        )
    return Stroll(sigma=a.sigma + b.sigma, patterns=a.patterns + b.patterns[1:])


class StrollSynthesisError(RuntimeError):
    """A stroll-based colouring failed its own propriety check."""


def selection_vertices(h: GallaiGraph, rows: Sequence[int]) -> tuple[int, ...]:
    """Flat indices of the one-per-column selection given by ``rows``."""
    if len(rows) != h.n:
        raise ValueError(f"selection needs {h.n} rows, got {len(rows)}")
    return tuple(h.vertex(i, rows[i]) for i in range(h.n))


def synthesize_coloring(
    h: GallaiGraph, rows: Sequence[int], st: Stroll
) -> tuple[ReplicatedGraph, Coloring]:
    """Turn a good stroll for the selection's sign sequence into a proper
    4-colouring of the replicated graph.

    Column i takes the stroll's i-th pattern: the pair colours the selected
    vertex and its clone (lower colour on the original), the next cyclic
    part colours the row below, the last part the row above.
    """
    rows = [r % 3 for r in rows]
    sigma = encode_sigma(rows)
    if st.sigma != sigma:
        raise ValueError("stroll signs do not match the selection's sequence")
    if st.start() != START or st.end() != GOOD_END:
        raise ValueError(
            "stroll must run from [12]34 to [12]43 to close up the last column"
        )
    if not is_valid_stroll(st):
        raise ValueError("invalid stroll")
    w = selection_vertices(h, rows)
    rg = replicate(h.graph, w)
    colors = [0] * rg.graph.n
    for i in range(h.n):
        (p, q), a, b = st.patterns[i]
        sel = h.vertex(i, rows[i])
        colors[sel] = p
        colors[rg.clone_index(sel)] = q
        colors[h.vertex(i, rows[i] + 1)] = a
        colors[h.vertex(i, rows[i] + 2)] = b
    coloring = Coloring(tuple(colors), 4)
    reason = coloring_violation(rg.graph, coloring)
    if reason is not None:
        raise StrollSynthesisError(f"synthesized colouring is improper: {reason}")
    return rg, coloring


def pattern_at(
    h: GallaiGraph, rows: Sequence[int], rg: ReplicatedGraph, c: Coloring, i: int
) -> Pattern:
    """Read off the pattern of column ``i`` from a colouring of the
    replicated graph; raises if the clique is not rainbow."""
    rows = [r % 3 for r in rows]
    sel = h.vertex(i, rows[i])
    quad = (sel, rg.clone_index(sel), h.vertex(i, rows[i] + 1), h.vertex(i, rows[i] + 2))
    cols = [c.colors[v] for v in quad]
    if len(set(cols)) != 4:
        raise ValueError(f"colouring is not proper on the column-{i} clique: {cols}")
    return make_pattern((cols[0], cols[1]), cols[2], cols[3])
