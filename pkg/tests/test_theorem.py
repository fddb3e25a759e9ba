from itertools import product

import pytest

from replcrit.coloring import chromatic_number, criticality, validate_coloring
from replcrit.gallai import GallaiGraph, parse_w_literal
from replcrit.graphs import Graph, complete_graph, cycle_graph, path_graph
from replcrit.replication import replicate
from replcrit.signseq import encode_sigma
from replcrit.theorem import (
    classify_structural_case,
    complete_selection,
    conjecture_check,
    constructive_coloring,
    verify_theorem,
)


class TestClassification:
    def test_doubled_column(self, h4):
        v = classify_structural_case(h4, parse_w_literal(h4, "0,0;0,1"))
        assert v.case == "A" and v.column == 0

    def test_nearly_full_row_zero_odd(self, h5):
        v = classify_structural_case(h5, parse_w_literal(h5, "0,0;1,0;2,0;3,0"))
        assert v.case == "B" and v.row0_count == 4

    def test_row_one_even(self, h4):
        v = classify_structural_case(h4, h4.row(1))
        assert v.case == "C" and v.path_order == 4

    def test_priority_a_beats_b(self, h5):
        w = set(h5.row(0)) | {h5.vertex(0, 1)}
        assert classify_structural_case(h5, w).case == "A"

    def test_row_condition_needs_odd_columns(self, h4):
        # full row 0 with even column count is no structural case at all
        assert classify_structural_case(h4, h4.row(0)).case == "none"

    def test_long_path_needs_even_columns(self, h5):
        assert classify_structural_case(h5, h5.row(1)).case == "none"

    def test_empty_set(self, h4):
        assert classify_structural_case(h4, ()).case == "none"


class TestCompletion:
    def test_empty_even(self, h4):
        assert complete_selection(h4, ()) == (0, 0, 0, 0)

    def test_empty_odd_avoids_row_zero_overflow(self, h5):
        assert complete_selection(h5, ()) == (0, 0, 0, 1, 1)

    def test_partial(self, h4):
        assert complete_selection(h4, parse_w_literal(h4, "1,2")) == (0, 2, 0, 0)

    def test_case_subset_rejected(self, h4):
        with pytest.raises(ValueError):
            complete_selection(h4, parse_w_literal(h4, "0,0;0,1"))

    @pytest.mark.parametrize("n", [4, 5])
    def test_every_completion_checks_out(self, n):
        h = GallaiGraph(n)
        for mask in range(0, 2 ** (3 * n), 7):  # stride keeps this quick
            w = tuple(v for v in range(3 * n) if mask >> v & 1)
            if classify_structural_case(h, w).case != "none":
                continue
            rows = complete_selection(h, w)
            z = {h.vertex(i, rows[i]) for i in range(n)}
            assert set(w) <= z
            assert len(z) == n
            assert classify_structural_case(h, z).case == "none"


class TestConstructiveColoring:
    def test_empty_subset(self, h4):
        rg, col = constructive_coloring(h4, ())
        assert rg.graph == h4.graph
        assert validate_coloring(rg.graph, col)

    def test_full_selection(self, h4):
        w = parse_w_literal(h4, "0,0;1,1;2,2;3,0")
        rg, col = constructive_coloring(h4, w)
        assert rg.graph.n == 16
        assert validate_coloring(rg.graph, col)

    def test_case_subset_rejected(self, h4):
        with pytest.raises(ValueError):
            constructive_coloring(h4, h4.row(1))

    def test_restriction_proper_for_all_partial_selections(self, h4):
        # every subset of a fixed good selection, restricted from its completion
        base = parse_w_literal(h4, "0,0;1,1;2,2;3,0")
        for mask in range(16):
            w = tuple(v for i, v in enumerate(base) if mask >> i & 1)
            rg, col = constructive_coloring(h4, w)
            assert validate_coloring(rg.graph, col)
            assert col.k == 4


class TestVerifyTheorem:
    def test_n4_constructive(self):
        rep = verify_theorem(4, mode="constructive")
        assert rep.passed
        assert rep.subset_count == 4096
        assert rep.case_counts == {"A": 3840, "B": 0, "C": 8, "none": 248}
        assert not rep.five_critical and not rep.falsifications

    def test_n4_solver_chi_values(self):
        rep = verify_theorem(4, mode="solver", detail="full")
        assert rep.passed
        by_w = {e.w: e for e in rep.entries}
        assert by_w[()].chi == 4
        assert all(e.chi >= 5 for e in rep.entries if e.case != "none")
        assert all(e.chi == 4 for e in rep.entries if e.case == "none")

    def test_jobs_produce_identical_reports(self):
        seq = verify_theorem(4, mode="constructive", jobs=1)
        par = verify_theorem(4, mode="constructive", jobs=3)
        assert seq == par

    def test_mode_validation(self):
        with pytest.raises(ValueError):
            verify_theorem(4, mode="quick")
        with pytest.raises(ValueError):
            verify_theorem(3)
        with pytest.raises(ValueError):
            verify_theorem(7)


class TestConjecture:
    def test_clique_holds_with_single_vertex(self):
        result = conjecture_check(complete_graph(4), 4)
        assert result.holds and result.witness == (0,)
        assert result.witness_report.is_vertex_critical
        assert result.witness_report.chi == 5

    def test_odd_cycle_holds(self):
        result = conjecture_check(cycle_graph(5), 3)
        assert result.holds
        rg = replicate(cycle_graph(5), result.witness)
        assert criticality(rg.graph, 4).is_vertex_critical

    def test_non_critical_input_rejected(self):
        with pytest.raises(ValueError):
            conjecture_check(path_graph(3), 2)

    def test_size_budget(self):
        with pytest.raises(ValueError):
            conjecture_check(Graph(17), 1)


def test_dichotomy_on_one_per_column_selections(h4):
    # every full selection is either a structural case or has a good sequence
    from replcrit.strolls import classify_sequence

    for rows in product(range(3), repeat=4):
        w = [h4.vertex(i, rows[i]) for i in range(4)]
        verdict = classify_structural_case(h4, w)
        if verdict.case == "none":
            assert classify_sequence(encode_sigma(rows)).good
        else:
            rg = replicate(h4.graph, w)
            assert chromatic_number(rg.graph)[0] >= 5


def test_scan_jobs_deterministic():
    from replcrit.scan import scan_corpus

    text = "C~\nBw\nDhc\n"
    seq = scan_corpus(text, 3, jobs=1)
    par = scan_corpus(text, 3, jobs=2)
    strip = lambda e: {k: v for k, v in vars(e).items() if k != "seconds"}
    assert [strip(e) for e in seq.entries] == [strip(e) for e in par.entries]
    assert seq.counterexamples == par.counterexamples


class TestFalsificationPath:
    def test_missing_stroll_is_reported_loudly(self, monkeypatch):
        import replcrit.theorem as theorem_mod

        monkeypatch.setattr(theorem_mod, "find_stroll", lambda *a, **k: None)
        rep = verify_theorem(4, mode="constructive")
        assert not rep.passed
        assert rep.falsifications
        assert all("no good stroll" in f["error"] for f in rep.falsifications)
        # condition-free subsets are exactly the ones that needed strolls
        assert len(rep.falsifications) == rep.case_counts["none"]

    def test_cli_exits_nonzero_on_falsification(self, monkeypatch):
        from click.testing import CliRunner

        import replcrit.theorem as theorem_mod
        from replcrit.cli import main as cli_main

        monkeypatch.setattr(theorem_mod, "find_stroll", lambda *a, **k: None)
        result = CliRunner().invoke(
            cli_main,
            ["verify-theorem", "--n", "4", "--mode", "constructive"],
            catch_exceptions=False,
        )
        assert result.exit_code == 1
        assert "FAIL" in result.output
