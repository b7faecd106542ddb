"""Named graph families, exact cycle machinery (longest cycle, disjoint
cycle packing, feedback vertex sets), and the witness-or-certificate
dichotomy."""

from __future__ import annotations

import itertools
import random

import pytest
from conftest import graphs_up_to, random_graph

from idforest import (CYCLE_SEARCH_MAX, MARGUERITE_SEARCH_MAX, Graph,
                      SizeLimitError, VertexPartition, brute_minor,
                      circumference, complete_graph, cycle_graph, cycle_packing,
                      dichotomy, disjoint_union, exact_fvs, gen_antichain_h,
                      gen_cycle, gen_marguerite, gen_triangles, identify_set,
                      identify_partition, idf_exact, induced_subgraph,
                      is_forest, is_id_forest_partition, is_isomorphic,
                      longest_cycle, max_cycle_packing, max_marguerite,
                      path_graph)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def is_cycle_in(g: Graph, cyc: list[int]) -> bool:
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    return all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])
               for i in range(len(cyc)))


def independent_max_packing(g: Graph) -> int:
    """Most vertex-disjoint cycles, via induced 2-regular connected subsets.

    Any packing can be retracted to chordless cycles on subsets of the same
    vertices, so restricting to induced cycles loses nothing.
    """
    cycles = []
    for size in range(3, g.n + 1):
        for cand in itertools.combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, cand)
            if sub.m == size and all(sub.degree(v) == 2 for v in sub.vertices):
                comp_seen = {0}
                stack = [0]
                while stack:
                    u = stack.pop()
                    for w in sub.adj[u]:
                        if w not in comp_seen:
                            comp_seen.add(w)
                            stack.append(w)
                if len(comp_seen) == size:
                    cycles.append(frozenset(cand))

    def best(remaining: list) -> int:
        if not remaining:
            return 0
        first, *rest = remaining
        skip = best(rest)
        take = 1 + best([c for c in rest if not (c & first)])
        return max(skip, take)

    return best(cycles)


class TestGenerators:
    def test_cycle_family(self):
        assert gen_cycle(5) == cycle_graph(5)

    def test_triangles_family(self):
        g = gen_triangles(3)
        assert (g.n, g.m) == (9, 9)
        assert is_isomorphic(g, disjoint_union(*[complete_graph(3)] * 3))
        with pytest.raises(ValueError):
            gen_triangles(0)

    def test_marguerite_family(self):
        g = gen_marguerite(3)
        assert (g.n, g.m) == (7, 9)
        assert g.degree(0) == 6  # the shared hub
        assert is_isomorphic(gen_marguerite(1), complete_graph(3))

    def test_marguerite_is_identified_triangles(self):
        for m in range(1, 4):
            collapsed, _ = identify_set(gen_triangles(m), range(0, 3 * m, 3))
            assert is_isomorphic(collapsed, gen_marguerite(m))

    def test_marguerite_is_an_identified_cycle(self):
        for m in range(2, 4):
            collapsed, _ = identify_set(gen_cycle(3 * m), range(0, 3 * m, 3))
            assert is_isomorphic(collapsed, gen_marguerite(m))

    def test_antichain_family_shape(self):
        for k in range(1, 4):
            g = gen_antichain_h(k)
            assert (g.n, g.m) == (3 * k + 3, 6 * k)
            ring, apexes = range(3 * k), range(3 * k, 3 * k + 3)
            assert all(g.degree(a) == k for a in apexes)
            assert all(g.degree(v) == 3 for v in ring)
            assert not any(g.has_edge(a, b) for a in apexes for b in apexes
                           if a < b)

    def test_antichain_contains_the_next_marguerite_but_not_the_one_after(self):
        g = gen_antichain_h(2)
        assert brute_minor(gen_marguerite(2), g) is not None
        assert brute_minor(gen_marguerite(3), g) is None


class TestLongestCycle:
    @pytest.mark.parametrize("graph,length", [
        (path_graph(5), 0),
        (Graph(0), 0),
        (cycle_graph(5), 5),
        (complete_graph(4), 4),
        (gen_marguerite(2), 3),
        (disjoint_union(cycle_graph(3), cycle_graph(5)), 5),
        (petersen(), 9),
    ])
    def test_circumference_values(self, graph, length):
        assert circumference(graph) == length

    def test_returned_cycle_is_real(self):
        rng = random.Random(149)
        for _ in range(30):
            g = random_graph(rng, rng.randint(3, 9), 0.4)
            cyc = longest_cycle(g)
            if cyc:
                assert is_cycle_in(g, cyc)
                assert len(cyc) == circumference(g)

    def test_size_guard(self):
        with pytest.raises(SizeLimitError):
            longest_cycle(Graph(CYCLE_SEARCH_MAX + 1))


class TestCyclePacking:
    @pytest.mark.parametrize("graph,count", [
        (path_graph(6), 0),
        (cycle_graph(5), 1),
        (complete_graph(4), 1),
        (gen_triangles(3), 3),
        (gen_marguerite(3), 1),
        (complete_graph(6), 2),
        (petersen(), 2),
    ])
    def test_known_counts(self, graph, count):
        assert max_cycle_packing(graph) == count

    def test_packing_is_disjoint_and_real(self):
        rng = random.Random(151)
        for _ in range(30):
            g = random_graph(rng, rng.randint(3, 9), 0.4)
            packing = cycle_packing(g)
            used: set = set()
            for cyc in packing:
                assert is_cycle_in(g, cyc)
                assert not (used & set(cyc))
                used |= set(cyc)

    def test_count_matches_independent_enumeration(self):
        rng = random.Random(157)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 8), rng.choice([0.3, 0.5]))
            assert max_cycle_packing(g) == independent_max_packing(g)


class TestFeedbackVertexSet:
    @pytest.mark.parametrize("graph,size", [
        (cycle_graph(5), 1),
        (gen_marguerite(3), 1),
        (gen_triangles(2), 2),
        (complete_graph(4), 2),
        (path_graph(4), 0),
        (petersen(), 3),
    ])
    def test_known_sizes(self, graph, size):
        assert len(exact_fvs(graph)) == size

    def test_removal_leaves_a_forest_and_is_minimum(self):
        rng = random.Random(163)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 8), 0.4)
            x = exact_fvs(g)
            rest, _ = induced_subgraph(g, [v for v in g.vertices if v not in x])
            assert is_forest(rest)
            for size in range(len(x)):
                for cand in itertools.combinations(range(g.n), size):
                    keep = [v for v in g.vertices if v not in cand]
                    assert not is_forest(induced_subgraph(g, keep)[0])


class TestMaxMarguerite:
    @pytest.mark.parametrize("graph,count", [
        (complete_graph(3), 1),
        (gen_marguerite(2), 2),
        (gen_cycle(9), 1),
        (gen_triangles(2), 1),
        (gen_antichain_h(2), 2),
        (path_graph(5), 0),
    ])
    def test_known_counts(self, graph, count):
        assert max_marguerite(graph) == count

    def test_self_values(self):
        for m in range(1, 5):
            assert max_marguerite(gen_marguerite(m)) == m

    def test_size_guard(self):
        with pytest.raises(SizeLimitError):
            max_marguerite(Graph(MARGUERITE_SEARCH_MAX + 1))


class TestDichotomy:
    def test_path_gets_an_empty_identification_set(self):
        out = dichotomy(path_graph(10), 3)
        assert not out.is_witness
        assert out.id_set == VertexPartition()

    def test_many_triangles_are_found_as_disjoint_cycles(self):
        g = gen_triangles(4)
        out = dichotomy(g, 3)
        assert out.family == "triangles" and out.parameter == 3
        assert is_isomorphic(out.model.pattern, gen_triangles(3))
        assert out.model.validates_in(g)

    def test_long_cycle_is_found_when_packing_falls_short(self):
        g = cycle_graph(8)
        out = dichotomy(g, 5)
        assert out.family == "cycle"
        assert is_isomorphic(out.model.pattern, cycle_graph(5))
        assert out.model.validates_in(g)

    def test_marguerite_is_found_when_cycles_fall_short(self):
        g = gen_marguerite(2)
        out = dichotomy(g, 2)
        assert out.family == "marguerite"
        assert out.model.validates_in(g)

    def test_four_cycle_gets_the_antipodal_identification(self):
        out = dichotomy(cycle_graph(4), 2)
        assert not out.is_witness
        assert is_id_forest_partition(cycle_graph(4), out.id_set)

    def test_parameter_below_one_rejected(self):
        with pytest.raises(ValueError):
            dichotomy(cycle_graph(3), 0)

    def test_every_outcome_is_sound_on_random_graphs(self):
        rng = random.Random(167)
        for i in range(80):
            g = random_graph(rng, rng.randint(2, 9), rng.choice([0.2, 0.4, 0.6]))
            k = 1 + i % 3
            out = dichotomy(g, k)
            if out.is_witness:
                assert out.model.validates_in(g)
                expected = {
                    "triangles": gen_triangles(k),
                    "marguerite": gen_marguerite(k),
                }.get(out.family, gen_cycle(max(k, 3)))
                assert is_isomorphic(out.model.pattern, expected)
            else:
                assert is_id_forest_partition(g, out.id_set)

    def test_witness_json_shape(self):
        out = dichotomy(gen_triangles(2), 2)
        payload = out.as_json_dict()
        assert payload["family"] == "triangles" and payload["k"] == 2
        assert len(payload["branch_sets"]) == gen_triangles(2).n

    def test_id_set_json_shape(self):
        out = dichotomy(cycle_graph(4), 2)
        assert out.as_json_dict() == {"id_set": [[0, 2]]}
