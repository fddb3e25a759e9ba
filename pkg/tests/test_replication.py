import random

import pytest

from replcrit.coloring import chromatic_number, is_clique
from replcrit.gallai import parse_w_literal
from replcrit.graphs import Graph, bits, complete_graph
from replcrit.replication import clique_x, replicate, segment_y

from .conftest import random_graph, replicate_one


def test_empty_set_is_identity():
    g = complete_graph(3)
    rg = replicate(g, ())
    assert rg.graph == g and rg.replicated == ()


def test_single_vertex_of_k1_gives_k2():
    rg = replicate(Graph(1), [0])
    assert rg.graph == complete_graph(2)


def test_replicated_corner_of_four_column_stack(h4):
    v = h4.vertex(0, 0)
    rg = replicate(h4.graph, [v])
    assert rg.graph.n == 13
    assert rg.graph.edge_count() == 29
    clone = rg.clone_index(v)
    expected = {v} | set(h4.graph.neighbor_list(v))
    assert set(rg.graph.neighbor_list(clone)) == expected
    assert expected == {
        h4.vertex(0, 0),
        h4.vertex(0, 1),
        h4.vertex(0, 2),
        h4.vertex(1, 0),
        h4.vertex(3, 0),
    }


def test_out_of_range_rejected():
    with pytest.raises(ValueError):
        replicate(Graph(2), [5])


def canonical_from_sequential(g: Graph, order: list[int]) -> Graph:
    """Replicate one vertex at a time in the given order, then rename clones
    to the canonical positions (sorted original order)."""
    result = g
    for v in order:
        result = replicate_one(result, v)
    members = sorted(order)
    # clone created at step t sits at index g.n + t and belongs to order[t]
    perm = list(range(g.n)) + [0] * len(order)
    for t, v in enumerate(order):
        perm[g.n + t] = g.n + members.index(v)
    masks = [0] * result.n
    for v in range(result.n):
        for u in bits(result.adj[v]):
            masks[perm[v]] |= 1 << perm[u]
    return Graph.from_adjacency(masks)


class TestOrderIndependence:
    def test_randomized_orders(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 9))
            w = sorted(rng.sample(range(g.n), rng.randint(0, g.n)))
            order = w[:]
            rng.shuffle(order)
            assert canonical_from_sequential(g, order) == replicate(g, w).graph

    def test_closed_twin_property(self):
        rng = random.Random(13)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 9))
            w = sorted(rng.sample(range(g.n), rng.randint(0, g.n)))
            rg = replicate(g, w)
            for clone, orig in rg.clone_items():
                assert rg.graph.has_edge(clone, orig)
                n_clone = set(rg.graph.neighbor_list(clone)) - {orig}
                n_orig = set(rg.graph.neighbor_list(orig)) - {clone}
                assert n_clone == n_orig

    def test_clone_clone_edges_follow_originals(self):
        rng = random.Random(17)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 8))
            w = sorted(rng.sample(range(g.n), rng.randint(2, g.n)))
            rg = replicate(g, w)
            for a in w:
                for b in w:
                    if a < b:
                        assert rg.graph.has_edge(
                            rg.clone_index(a), rg.clone_index(b)
                        ) == g.has_edge(a, b)


def test_chromatic_number_monotone_under_replication():
    rng = random.Random(19)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        w = sorted(rng.sample(range(g.n), rng.randint(0, g.n)))
        rg = replicate(g, w)
        assert chromatic_number(rg.graph)[0] >= chromatic_number(g)[0]


class TestColumnCliques:
    def test_sizes_and_cliqueness(self, h4):
        w = parse_w_literal(h4, "0,0;1,1;2,2;3,0")
        rg = replicate(h4.graph, w)
        for i in range(4):
            x = clique_x(h4, rg, i)
            assert len(x) == 4
            assert is_clique(rg.graph, x)

    def test_empty_w_gives_triangles(self, h4):
        rg = replicate(h4.graph, ())
        for i in range(4):
            assert clique_x(h4, rg, i) == h4.column(i)

    def test_double_column_gives_k5(self, h4):
        rg = replicate(h4.graph, parse_w_literal(h4, "0,0;0,1"))
        x0 = clique_x(h4, rg, 0)
        assert len(x0) == 5
        assert is_clique(rg.graph, x0)

    def test_segment_union(self, h4):
        w = parse_w_literal(h4, "0,0;1,1")
        rg = replicate(h4.graph, w)
        assert set(segment_y(h4, rg, 3)) == set(clique_x(h4, rg, 3)) | set(
            clique_x(h4, rg, 0)
        )

    def test_foreign_replication_rejected(self, h4, h5):
        rg = replicate(h5.graph, ())
        with pytest.raises(ValueError):
            clique_x(h4, rg, 0)
