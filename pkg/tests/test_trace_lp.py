from __future__ import annotations

from fractions import Fraction as F

from hypothesis import given, settings

from selfsim_app.core.catalog import one_loop, split_orbits, two_cycle, two_loops, with_source
from selfsim_app.core.quotient import build_quotient
from selfsim_app.core.trace_lp import (
    TraceSolution,
    certifies_no_trace,
    graph_g_trace_exists,
    graph_trace_exists,
    is_trace,
    pull_back,
    solve_graph_g_trace,
    solve_graph_trace,
    trace_system,
)

from .strategies import graphs


class TestMicroGraphs:
    def test_one_loop(self):
        assert graph_trace_exists(one_loop()).weights == {"v": F(1)}

    def test_two_cycle(self):
        assert graph_trace_exists(two_cycle()).weights == {"u": F(1, 2), "w": F(1, 2)}

    def test_two_loops_has_none(self):
        res = solve_graph_trace(two_loops())
        assert not res.feasible
        assert certifies_no_trace(two_loops(), res.certificate)
        assert set(res.certificate.as_strings()) <= {"balance:v", "monotone:a", "monotone:b", "normalize"}


def test_system_rows(ring2):
    system = trace_system(ring2.graph, ring2.vertex_orbits)
    kinds = [label[0] for label in system.labels]
    assert kinds.count("balance") == 3
    assert kinds.count("monotone") == len(ring2.graph.edges)
    assert ("orbit", "w2") in system.labels
    assert system.labels[-1] == ("normalize",)
    assert system.exempt == ()


def test_ring_has_no_g_trace(ring2):
    res = solve_graph_g_trace(ring2)
    assert not res.feasible
    assert res.g_invariant
    assert certifies_no_trace(ring2.graph, res.certificate, ring2.vertex_orbits)
    assert graph_g_trace_exists(ring2) is None


def test_unreceiving_vertices_are_exempt():
    graph = with_source().graph
    res = solve_graph_trace(graph)
    assert res.exempt == ("s",)
    assert "s" in res.note
    assert res.solution.weights == {"s": F(0), "u": F(1)}


def test_pull_back_gives_a_g_trace():
    ssg = split_orbits()
    q = build_quotient(ssg)
    qt = graph_trace_exists(q.graph)
    assert qt is not None
    pulled = pull_back(ssg, q.orbit_of, qt)
    assert pulled.normalization == 1
    assert is_trace(ssg.graph, pulled, ssg.vertex_orbits)


def test_is_trace_rejects_bad_weights():
    g = two_cycle()
    assert not is_trace(g, TraceSolution({"u": F(1, 3), "w": F(2, 3)}))
    assert not is_trace(g, TraceSolution({"u": F(1)}))
    assert is_trace(g, TraceSolution({"u": F(1, 2), "w": F(1, 2)}))


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=5, max_edges=8, source_free=False))
def test_every_answer_replays(graph):
    res = solve_graph_trace(graph)
    if res.feasible:
        assert res.solution.normalization == 1
        assert is_trace(graph, res.solution)
    else:
        assert certifies_no_trace(graph, res.certificate)
