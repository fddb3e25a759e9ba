"""Shared fixtures and independent oracle implementations.

The oracles here (exhaustive assignment colouring, permutation path search,
index-subset embedding search, subset-filter independent sets) deliberately
avoid the algorithms used by the package, so that agreement is evidence.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

import pytest
from hypothesis import settings

from replcrit.gallai import GallaiGraph
from replcrit.graphs import Graph

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def h4():
    return GallaiGraph(4)


@pytest.fixture(scope="session")
def h5():
    return GallaiGraph(5)


@pytest.fixture(scope="session")
def h6():
    return GallaiGraph(6)


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def naive_is_k_colorable(g: Graph, k: int) -> bool:
    """Try every assignment of k colours to the vertices."""
    if g.n == 0:
        return True
    if k == 0:
        return False
    edges = g.edges()
    for assignment in product(range(k), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in edges):
            return True
    return False


def naive_chromatic_number(g: Graph) -> int:
    for k in range(g.n + 1):
        if naive_is_k_colorable(g, k):
            return k
    return g.n


def naive_longest_path_order(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for perm in permutations(range(g.n), size):
            if all(g.has_edge(perm[i], perm[i + 1]) for i in range(size - 1)):
                best = size
                break
    return best


def naive_precedes(tau: tuple[int, ...], sigma: tuple[int, ...]) -> bool:
    """Try every index subset and check the zero-parity conditions literally."""
    m = len(tau)
    if m == 0:
        return True
    zeros = [1 if s == 0 else 0 for s in sigma]

    def gap_even(lo: int, hi: int) -> bool:  # z(sigma[lo:hi]) == 0
        return sum(zeros[lo:hi]) % 2 == 0

    for idx in combinations(range(len(sigma)), m):
        if tuple(sigma[i] for i in idx) != tau:
            continue
        if not gap_even(0, idx[0]):
            continue
        if all(gap_even(idx[j] + 1, idx[j + 1]) for j in range(m - 1)):
            return True
    return False


def naive_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """Maximal independent sets by filtering all subsets."""
    sets = []
    verts = list(range(g.n))
    for size in range(g.n + 1):
        for combo in combinations(verts, size):
            if all(not g.has_edge(u, v) for u, v in combinations(combo, 2)):
                sets.append(set(combo))
    maximal = [s for s in sets if not any(s < t for t in sets)]
    return sorted(tuple(sorted(s)) for s in maximal)


def replicate_one(g: Graph, v: int) -> Graph:
    """Single-vertex replication, written independently of the package."""
    masks = list(g.adj) + [0]
    c = g.n
    closed = g.adj[v] | 1 << v
    masks[c] = closed
    for u in range(g.n):
        if closed >> u & 1:
            masks[u] |= 1 << c
    return Graph.from_adjacency(masks)
