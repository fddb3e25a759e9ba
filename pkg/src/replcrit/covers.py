"""Minimal vertex covers and the computer-algebra script exporter.

The minimal transversals of a graph are exactly the complements of its
maximal independent sets.  Their monomials generate the cover ideal; the
exporter writes a Macaulay2 script that builds that ideal and prints the
associated primes and depth of its first few powers.  The script is emitted
only, never executed here.
"""

from __future__ import annotations

from .fractional import maximal_independent_sets
from .graphs import Graph

EXPORT_VARIABLE_CAP = 26


def minimal_transversals(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex covers, sorted by (size, content)."""
    covers = []
    everything = set(range(g.n))
    for s in maximal_independent_sets(g):
        covers.append(tuple(sorted(everything - set(s))))
    return sorted(covers, key=lambda c: (len(c), c))


def cover_ideal_script(g: Graph, max_power: int) -> str:
    """A Macaulay2 script computing Ass(J^s) and depth(R/J^s) for s up to
    ``max_power``, where J is the cover ideal of the graph.

    Variables are x1..xn (1-based); generators are sorted deterministically.
    """
    if g.n > EXPORT_VARIABLE_CAP:
        raise ValueError(
            f"script export capped at {EXPORT_VARIABLE_CAP} variables (got {g.n})"
        )
    if g.n == 0:
        raise ValueError("cannot export a script for the empty graph")
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    gens = []
    for cover in minimal_transversals(g):
        gens.append("*".join(f"x{v + 1}" for v in cover) if cover else "1")
    variables = ", ".join(f"x{v + 1}" for v in range(g.n))
    lines = [
        f"-- cover ideal of a graph on {g.n} vertices and {g.edge_count()} edges",
        "-- generators are the inclusion-minimal vertex covers",
        'needsPackage "Depth";',
        f"R = QQ[{variables}];",
        f"J = ideal({', '.join(gens)});",
        f"for s from 1 to {max_power} do (",
        '    << "s = " << s << endl;',
        '    << "Ass(J^s)   = " << associatedPrimes (J^s) << endl;',
        '    << "depth(R/J^s) = " << depth (R/(J^s)) << endl;',
        ");",
    ]
    return "\n".join(lines) + "\n"
