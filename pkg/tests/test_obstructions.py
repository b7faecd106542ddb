"""Exhaustive graph enumeration and the minor-minimal obstruction scans,
with their verification checks and catalog files."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest
from conftest import unlabeled_graph_count

from idforest import (Graph, SizeLimitError, canonical_form, canonical_graph,
                      complete_graph,
                      cycle_graph, disjoint_union, enumerate_graphs,
                      family_obstruction_report, gen_marguerite, gen_triangles,
                      graph6_str, graph6_to_graph, idf_decision,
                      is_minor_minimal, obs_idf, obs_vc, one_step_minors,
                      path_graph, vc_decision, verify_section4, write_catalog)

CHECK_NAMES = {
    "a_bridgeless",
    "b_bridgeless_vc_members",
    "c_components_2_connected",
    "d_vc_value_exact",
    "e_idf_value_window",
    "f_spanning_vc_obstruction",
    "g_size_bound",
}


def forms(graphs) -> set[bytes]:
    return {canonical_form(g) for g in graphs}


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4),
                                         (4, 11), (5, 34), (6, 156)])
    def test_class_counts_match_cycle_index_oracle(self, n, count):
        graphs = list(enumerate_graphs(n))
        assert len(graphs) == count == unlabeled_graph_count(n)
        assert all(g.n == n for g in graphs)

    def test_level_seven_count(self):
        assert sum(1 for _ in enumerate_graphs(7)) == unlabeled_graph_count(7)

    def test_no_two_graphs_are_isomorphic(self):
        graphs = list(enumerate_graphs(6))
        assert len(forms(graphs)) == len(graphs)

    def test_representatives_are_canonical(self):
        for g in enumerate_graphs(5):
            assert canonical_graph(g) == g
            assert graph6_to_graph(graph6_str(g)) == g

    def test_deterministic_across_calls(self):
        first = [graph6_str(g) for g in enumerate_graphs(6)]
        second = [graph6_str(g) for g in enumerate_graphs(6)]
        assert first == second

    def test_parallel_workers_match_serial(self):
        serial = [graph6_str(g) for g in enumerate_graphs(7)]
        script = ("import idforest\n"
                  "for g in idforest.enumerate_graphs(7, workers=2):\n"
                  "    print(idforest.graph6_str(g))\n")
        proc = subprocess.run([sys.executable, "-c", script],
                              capture_output=True, text=True, check=True)
        assert proc.stdout.split() == serial

    def test_checkpoint_files_round_trip(self, tmp_path):
        script = ("import idforest\n"
                  f"for g in idforest.enumerate_graphs(5, checkpoint_dir={str(tmp_path)!r}):\n"
                  "    print(idforest.graph6_str(g))\n")
        first = subprocess.run([sys.executable, "-c", script],
                               capture_output=True, text=True, check=True)
        level5 = tmp_path / "graphs-n5.g6"
        assert level5.exists()
        assert first.stdout.split() == level5.read_text().split()
        # a fresh process must reproduce the same stream from the checkpoint
        second = subprocess.run([sys.executable, "-c", script],
                                capture_output=True, text=True, check=True)
        assert second.stdout == first.stdout

    def test_size_guard(self):
        with pytest.raises(SizeLimitError):
            next(enumerate_graphs(11))
        with pytest.raises(ValueError):
            next(enumerate_graphs(-1))


class TestOneStepMinors:
    def test_triangle(self):
        results = list(one_step_minors(complete_graph(3)))
        # one vertex deletion, one edge deletion, one contraction per edge
        assert len(results) == 9
        assert forms(results) == forms([complete_graph(2),
                                        path_graph(3),
                                        Graph(2, [(0, 1)])])

    def test_every_result_is_strictly_smaller(self):
        for g in [cycle_graph(5), gen_marguerite(2), complete_graph(4)]:
            for h in one_step_minors(g):
                assert h.n < g.n or h.m < g.m


class TestMinorMinimality:
    def test_matching_pair_is_minimal_for_cover_above_one(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        assert is_minor_minimal(g, lambda h: vc_decision(h, 1))

    def test_four_cycle_is_not_minimal_for_cover_above_one(self):
        # its one-edge-deleted minor still needs two cover vertices
        assert not is_minor_minimal(cycle_graph(4), lambda h: vc_decision(h, 1))

    def test_triangle_is_minimal_for_identification_above_one(self):
        assert is_minor_minimal(complete_graph(3), lambda h: idf_decision(h, 1))


class TestObstructionScans:
    def test_cover_obstructions_for_tiny_budgets(self):
        assert forms(obs_vc(0).obstructions) == forms([complete_graph(2)])
        assert forms(obs_vc(1).obstructions) == forms([
            complete_graph(3),
            disjoint_union(complete_graph(2), complete_graph(2)),
        ])

    def test_cover_obstructions_budget_two(self):
        report = obs_vc(2)
        assert forms(report.obstructions) == forms([
            complete_graph(4),
            cycle_graph(5),
            disjoint_union(complete_graph(3), complete_graph(2)),
            disjoint_union(*[complete_graph(2)] * 3),
        ])
        assert report.kind == "vc" and report.k == 2

    def test_identification_obstructions_for_tiny_budgets(self):
        for k in (0, 1):
            report = obs_idf(k)
            assert forms(report.obstructions) == forms([complete_graph(3)])
            assert list(report.provenance.values()) == ["bridgeless_vc_obstruction"]

    def test_long_run_guard(self):
        with pytest.raises(ValueError):
            obs_vc(3)
        with pytest.raises(ValueError):
            obs_idf(3)
        with pytest.raises(ValueError):
            obs_vc(4, long_run=True)

    def test_reports_serialize(self):
        payload = obs_vc(1).as_json_dict()
        assert payload["kind"] == "vc" and payload["k"] == 1
        assert payload["count"] == 2 == len(payload["obstructions"])


class TestVerification:
    @pytest.mark.parametrize("k", [0, 1])
    def test_all_checks_pass_for_tiny_budgets(self, k):
        checks = verify_section4(k)
        assert set(checks) == CHECK_NAMES
        failing = {name: c.detail for name, c in checks.items() if not c.passed}
        assert not failing

    def test_precomputed_reports_are_accepted(self):
        checks = verify_section4(1, vc_report=obs_vc(1), idf_report=obs_idf(1))
        assert all(c.passed for c in checks.values())


class TestFamilyReport:
    def test_budget_one_flags_the_marguerite_claim(self):
        rows = {(r.family, r.description): r for r in family_obstruction_report(1)}
        cyc = rows[("cycle", "C3")]
        assert cyc.claimed_member and cyc.computed_member and cyc.agrees
        marg = rows[("marguerite", "2-petal marguerite")]
        assert marg.claimed_member and not marg.computed_member
        assert marg.agrees is False
        shifted = rows[("marguerite", "1-petal marguerite (shifted index)")]
        assert shifted.claimed_member is None and shifted.computed_member
        assert shifted.agrees is None

    def test_budget_two_flags_the_marguerite_claim(self):
        rows = {(r.family, r.description): r for r in family_obstruction_report(2)}
        assert rows[("cycle", "C5")].agrees
        assert rows[("triangles", "2 disjoint triangles")].agrees
        marg = rows[("marguerite", "3-petal marguerite")]
        assert marg.agrees is False
        shifted = rows[("marguerite", "2-petal marguerite (shifted index)")]
        assert shifted.computed_member

    def test_budget_zero_has_no_cycle_graph(self):
        rows = {(r.family, r.description): r for r in family_obstruction_report(0)}
        cyc = rows[("cycle", "C1")]
        assert cyc.graph is None and cyc.computed_member is None


class TestCatalogFiles:
    def test_files_match_report_and_are_deterministic(self, tmp_path):
        report = obs_vc(1)
        g6_path, json_path = write_catalog(report, str(tmp_path / "a"))
        with open(g6_path) as fh:
            assert fh.read().split() == report.graph6_lines()
        with open(json_path) as fh:
            assert json.load(fh) == report.as_json_dict()
        again = write_catalog(report, str(tmp_path / "b"))
        assert open(again[0]).read() == open(g6_path).read()
        assert open(again[1]).read() == open(json_path).read()
