from __future__ import annotations

import pytest
from hypothesis import given, settings

from selfsim_app.core.catalog import one_loop, plain, split_orbits, two_cycle, two_loops
from selfsim_app.core.graph_analysis import (
    ResourceExceededError,
    every_g_circuit_has_entry,
    find_circuit_without_entry,
    find_circuits,
    find_g_circuit,
    find_g_circuit_without_entry,
    g_circuit_vertices,
    g_circuit_with_entry_at,
    g_path,
    g_reaches,
    g_reaches_via_quotient,
    graph_algebra_pi_sufficient,
    graph_algebra_simple,
    has_entry,
    is_cofinal,
    is_weakly_g_transitive,
    path_into,
    reachable_from,
    receives_g_path_alt,
    unroll_g_circuit,
)
from selfsim_app.core.model import Graph, Path, SourcePresentError
from selfsim_app.core.quotient import build_quotient

from .strategies import self_similar_graphs


class TestReachability:
    def test_reachable_from_follows_in_edges(self, ring2):
        g = ring2.graph
        assert reachable_from(g, "v") == {"v", "w1", "w2"}
        assert reachable_from(g, "w1") == {"w1", "w2"}

    def test_g_path(self, ring2):
        path, g = g_path(ring2, "v", "w2")
        assert path == Path.of("e1")
        assert g == "1"
        assert g_path(ring2, "w1", "v") is None

    def test_path_into_may_be_empty(self, ring2):
        assert path_into(ring2.graph, "w1", {"w1"}) == Path.empty("w1")
        assert path_into(ring2.graph, "v", {"w2"}) == Path.of("e2")
        assert path_into(ring2.graph, "w1", {"v"}) is None

    @settings(max_examples=80, deadline=None)
    @given(self_similar_graphs())
    def test_three_forms_of_the_g_path_order_agree(self, ssg):
        q = build_quotient(ssg)
        direct = g_reaches(ssg)
        assert receives_g_path_alt(ssg).pairs == direct.pairs
        assert g_reaches_via_quotient(ssg, q.graph, q.orbit_of).pairs == direct.pairs


class TestCircuits:
    def test_two_cycle(self):
        g = two_cycle()
        (c,) = find_circuits(g)
        assert c.vertices == ("u", "w")
        assert c.path == Path.of("b", "a")
        assert not c.has_entry
        assert find_circuit_without_entry(g) is not None

    def test_parallel_edges_give_one_circuit(self):
        g = two_loops()
        (c,) = find_circuits(g)
        assert c.path == Path.of("a")
        assert c.has_entry
        assert find_circuit_without_entry(g) is None

    def test_cap(self):
        g = Graph.from_triples(["u", "w"], [("a", "u", "u"), ("b", "w", "w"), ("c", "u", "w"), ("d", "w", "u")])
        assert len(find_circuits(g)) == 3
        with pytest.raises(ResourceExceededError):
            find_circuits(g, cap=2)

    def test_has_entry(self):
        g = Graph.from_triples(["u", "w"], [("a", "u", "w"), ("b", "w", "u"), ("c", "u", "u")])
        assert has_entry(g, Path.of("b", "a"))
        assert not has_entry(one_loop(), Path.of("e"))


class TestGCircuits:
    def test_ring_g_circuit(self, ring2):
        w = find_g_circuit(ring2)
        assert w is not None
        assert w.path == Path.of("f1")
        assert w.twist == "1"
        assert set(g_circuit_vertices(ring2)) == {"w1", "w2"}

    def test_unrolling_composes(self, ring2):
        w = find_g_circuit(ring2)
        assert unroll_g_circuit(ring2, w, 3) == Path.of("f1", "f2", "f1")

    def test_ring_g_circuits_have_entries(self, ring3):
        assert every_g_circuit_has_entry(ring3)
        w = g_circuit_with_entry_at(ring3, "w1")
        assert w is not None
        assert ring3.graph.path_range(w.path) == "w1"
        assert ring3.act_vertex(w.twist, "w1") == ring3.graph.path_domain(w.path)
        assert g_circuit_with_entry_at(ring3, "v") is None

    def test_g_circuit_without_entry(self, swapped, one_loop_ssg):
        assert find_g_circuit_without_entry(swapped) is None
        bad = find_g_circuit_without_entry(one_loop_ssg)
        assert bad is not None and bad.path == Path.of("e")

    @settings(max_examples=60, deadline=None)
    @given(self_similar_graphs())
    def test_g_circuit_witnesses_unroll(self, ssg):
        for w, c in g_circuit_vertices(ssg).items():
            assert ssg.graph.path_range(c.path) == w
            assert ssg.graph.is_path(unroll_g_circuit(ssg, c, ssg.group.order + 1))


class TestCofinality:
    def test_ring_is_weakly_transitive(self, ring2):
        assert is_weakly_g_transitive(ring2).holds
        assert is_cofinal(ring2.graph).holds

    def test_split_orbits_are_not(self):
        res = is_weakly_g_transitive(split_orbits())
        assert not res.holds
        assert res.vertex == "a1"
        assert res.cycle is not None and len(res.cycle) == 1

    def test_disjoint_loops_not_cofinal(self):
        g = Graph.from_triples(["u", "w"], [("a", "u", "u"), ("b", "w", "w")])
        res = is_cofinal(g)
        assert not res.holds
        assert res.vertex == "u"
        assert res.cycle == Path.of("b")

    def test_sources_flagged(self):
        g = Graph.from_triples(["s", "u"], [("a", "u", "u"), ("b", "s", "u")])
        assert is_cofinal(g).sources_present
        with pytest.raises(SourcePresentError):
            is_weakly_g_transitive(plain(g))


class TestGraphCriteria:
    @pytest.mark.parametrize(
        ("graph", "simple", "pi"),
        [(one_loop(), False, False), (two_loops(), True, True), (two_cycle(), False, False)],
    )
    def test_micro_graphs(self, graph, simple, pi):
        assert graph_algebra_simple(graph).holds is simple
        assert graph_algebra_pi_sufficient(graph).holds is pi

    def test_simple_failure_reasons(self):
        res = graph_algebra_simple(one_loop())
        assert res.circuit == Path.of("e")
        g = Graph.from_triples(["u", "w"], [("a", "u", "u"), ("b", "u", "u"), ("c", "w", "w"), ("d", "w", "w")])
        res = graph_algebra_simple(g)
        assert not res.holds
        assert res.reason == "not cofinal"
        assert graph_algebra_pi_sufficient(g).holds

    def test_vertex_fed_by_a_circuit(self):
        g = Graph.from_triples(["u", "w"], [("a", "u", "u"), ("b", "u", "u"), ("c", "u", "w")])
        assert graph_algebra_pi_sufficient(g).holds
        assert graph_algebra_simple(g).holds
