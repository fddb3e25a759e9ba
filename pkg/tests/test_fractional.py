import random
from fractions import Fraction

import pytest

from replcrit.coloring import chromatic_number
from replcrit.fractional import (
    FractionalSolution,
    fractional_gap_condition,
    fractional_chromatic_number,
    maximal_independent_sets,
)
from replcrit.graphs import Graph, complete_graph, cycle_graph

from .conftest import naive_independent_sets, random_graph


class TestIndependentSets:
    def test_triangle(self):
        assert maximal_independent_sets(complete_graph(3)) == [(0,), (1,), (2,)]

    def test_five_cycle(self):
        got = maximal_independent_sets(cycle_graph(5))
        assert got == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]

    def test_four_column_stack_independence_number(self, h4):
        sets = maximal_independent_sets(h4.graph)
        assert max(len(s) for s in sets) == 4

    def test_agreement_with_subset_filter(self):
        rng = random.Random(71)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 9), p=rng.uniform(0.1, 0.8))
            assert maximal_independent_sets(g) == naive_independent_sets(g)

    def test_each_set_independent_and_maximal(self):
        rng = random.Random(73)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 12))
            for s in maximal_independent_sets(g):
                assert all(not g.has_edge(u, v) for u in s for v in s if u < v)
                others = set(range(g.n)) - set(s)
                assert all(any(g.has_edge(u, v) for v in s) for u in others)

    def test_cap(self):
        with pytest.raises(ValueError):
            maximal_independent_sets(Graph(41))


class TestFractionalChromatic:
    def test_clique(self):
        sol = fractional_chromatic_number(complete_graph(4))
        assert sol.value == Fraction(4)

    def test_odd_cycle(self):
        sol = fractional_chromatic_number(cycle_graph(5))
        assert sol.value == Fraction(5, 2)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_stock_graphs_equal_three(self, n):
        from replcrit.gallai import GallaiGraph

        g = GallaiGraph(n).graph
        sol = fractional_chromatic_number(g)
        assert sol.value == Fraction(3)
        assert sol.verify(g)

    def test_certificates_are_exact_fractions(self):
        sol = fractional_chromatic_number(cycle_graph(7))
        assert isinstance(sol.value, Fraction)
        assert all(isinstance(w, Fraction) for w in sol.weights.values())
        assert all(isinstance(y, Fraction) for y in sol.dual.values())
        assert sol.value == Fraction(7, 3)

    def test_sandwiched_between_clique_and_chromatic(self):
        rng = random.Random(79)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 9))
            sol = fractional_chromatic_number(g)
            assert sol.verify(g)
            # exact clique number: independence number of the complement
            omega = max(len(s) for s in maximal_independent_sets(g.complement()))
            assert omega <= sol.value <= chromatic_number(g)[0]

    def test_empty_graph(self):
        assert fractional_chromatic_number(Graph(0)).value == 0

    def test_edgeless_graph(self):
        assert fractional_chromatic_number(Graph(5)).value == 1

    def test_tampered_certificate_fails_verification(self):
        g = cycle_graph(5)
        sol = fractional_chromatic_number(g)
        bad = FractionalSolution(
            value=sol.value + 1, weights=sol.weights, dual=sol.dual
        )
        assert not bad.verify(g)


class TestBoundaryCondition:
    def test_clique_satisfies(self):
        assert fractional_gap_condition(complete_graph(4))

    def test_odd_cycle_satisfies(self):
        assert fractional_gap_condition(cycle_graph(5))

    def test_four_column_stack_is_tight(self, h4):
        # chromatic number 4, fractional exactly 3: the inequality fails
        assert not fractional_gap_condition(h4.graph)
