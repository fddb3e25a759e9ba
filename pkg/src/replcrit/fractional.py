"""Exact fractional chromatic number via a rational simplex over independent sets.

The covering LP (minimize total weight on maximal independent sets so that
every vertex is covered with weight at least 1) is solved in exact Fraction
arithmetic by a dense two-phase simplex with Bland's rule, so the optimum
comes with matching primal and dual certificates and no floating point
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .coloring import chromatic_number
from .graphs import Graph, bits

ENUMERATION_CAP = 40


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, each as a sorted tuple,
    in deterministic (sorted) order.

    Pivoting Bron-Kerbosch run on the non-adjacency relation.
    """
    if g.n > ENUMERATION_CAP:
        raise ValueError(f"enumeration capped at {ENUMERATION_CAP} vertices (got {g.n})")
    if g.n == 0:
        return [()]
    full = (1 << g.n) - 1
    nadj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    out: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(bits(r)))
            return
        # pivot: vertex of p|x with most non-neighbours in p (ties: least index)
        pivot, best = -1, -1
        for u in bits(p | x):
            cnt = (nadj[u] & p).bit_count()
            if cnt > best:
                pivot, best = u, cnt
        for v in bits(p & ~nadj[pivot]):
            bit = 1 << v
            expand(r | bit, p & nadj[v], x & nadj[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return sorted(out)


@dataclass(frozen=True)
class FractionalSolution:
    """Optimum of the fractional covering LP with both certificates.

    ``weights`` carries the covering weights on independent sets (only
    nonzero entries); ``dual`` the per-vertex packing weights.  Equality of
    the two values certifies optimality.
    """

    value: Fraction
    weights: dict[tuple[int, ...], Fraction]
    dual: dict[int, Fraction]

    def verify(self, g: Graph, sets: Optional[list[tuple[int, ...]]] = None) -> bool:
        """Re-check both certificates in exact arithmetic."""
        if sets is None:
            sets = maximal_independent_sets(g)
        if any(w < 0 for w in self.weights.values()):
            return False
        for v in range(g.n):
            cover = sum((w for s, w in self.weights.items() if v in s), Fraction(0))
            if cover < 1:
                return False
        for s in sets:
            if sum((self.dual.get(v, Fraction(0)) for v in s), Fraction(0)) > 1:
                return False
        if any(y < 0 for y in self.dual.values()):
            return False
        primal = sum(self.weights.values(), Fraction(0))
        packing = sum(self.dual.values(), Fraction(0))
        return primal == self.value and packing == self.value


def _simplex_cover(sets: list[tuple[int, ...]], n: int) -> FractionalSolution:
    """Two-phase dense simplex for min 1.x, Ax >= 1, x >= 0 (A: vertex rows,
    set columns).  Bland's rule throughout, so no cycling."""
    m = len(sets)
    # columns: m structural | n surplus (-I) | n artificial (I) | rhs
    width = m + 2 * n
    rows = []
    for v in range(n):
        row = [Fraction(0)] * (width + 1)
        for j, s in enumerate(sets):
            if v in s:
                row[j] = Fraction(1)
        row[m + v] = Fraction(-1)
        row[m + n + v] = Fraction(1)
        row[width] = Fraction(1)
        rows.append(row)
    basis = [m + n + v for v in range(n)]

    def reduced_costs(cost):
        rc = list(cost)
        for i, bi in enumerate(basis):
            cb = cost[bi]
            if cb:
                row = rows[i]
                for j in range(width):
                    if row[j]:
                        rc[j] -= cb * row[j]
        return rc

    def pivot(r: int, c: int) -> None:
        row = rows[r]
        inv = Fraction(1) / row[c]
        rows[r] = [x * inv for x in row]
        for i, other in enumerate(rows):
            if i != r and other[c]:
                f = other[c]
                base = rows[r]
                rows[i] = [x - f * y for x, y in zip(other, base)]
        basis[r] = c

    def run(cost, blocked) -> None:
        while True:
            rc = reduced_costs(cost)
            enter = -1
            for j in range(width):
                if j not in blocked and rc[j] < 0:
                    enter = j  # Bland: least index
                    break
            if enter < 0:
                return
            leave, best, best_basic = -1, None, None
            for i, row in enumerate(rows):
                if row[enter] > 0:
                    ratio = row[width] / row[enter]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < best_basic
                    ):
                        leave, best, best_basic = i, ratio, basis[i]
            if leave < 0:
                raise RuntimeError("covering LP is unbounded; input is inconsistent")
            pivot(leave, enter)

    # phase 1: drive the artificials to zero
    cost1 = [Fraction(0)] * width
    for j in range(m + n, width):
        cost1[j] = Fraction(1)
    run(cost1, blocked=frozenset())
    infeasibility = sum((rows[i][width] for i, b in enumerate(basis) if b >= m + n), Fraction(0))
    if infeasibility != 0:
        raise RuntimeError("covering LP infeasible; some vertex lies in no set")
    # pivot leftover artificials (basic at zero) out of the basis; rows with
    # no other nonzero entry are redundant and can keep theirs harmlessly
    for i in range(n):
        if basis[i] >= m + n:
            for j in range(m + n):
                if rows[i][j] != 0:
                    pivot(i, j)
                    break
    # phase 2: the real objective, artificials barred from re-entering
    cost2 = [Fraction(0)] * width
    for j in range(m):
        cost2[j] = Fraction(1)
    artificials = frozenset(range(m + n, width))
    run(cost2, blocked=artificials)

    x = [Fraction(0)] * m
    for i, b in enumerate(basis):
        if b < m:
            x[b] = rows[i][width]
    rc = reduced_costs(cost2)
    # dual values are the reduced costs of the surplus columns
    y = [rc[m + v] for v in range(n)]
    value = sum(x, Fraction(0))
    weights = {sets[j]: x[j] for j in range(m) if x[j] != 0}
    dual = {v: y[v] for v in range(n)}
    return FractionalSolution(value=value, weights=weights, dual=dual)


def fractional_chromatic_number(g: Graph) -> FractionalSolution:
    """Exact optimum of the fractional covering LP, with certificates."""
    if g.n == 0:
        return FractionalSolution(value=Fraction(0), weights={}, dual={})
    sets = maximal_independent_sets(g)
    sol = _simplex_cover(sets, g.n)
    if not sol.verify(g, sets):
        raise RuntimeError("simplex produced an invalid certificate")
    return sol


def fractional_gap_condition(g: Graph) -> bool:
    """Exact comparison: fractional chromatic number > chromatic number - 1."""
    chi, _ = chromatic_number(g)
    return fractional_chromatic_number(g).value > chi - 1
