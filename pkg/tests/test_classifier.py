from __future__ import annotations

import pytest

from selfsim_app.core.catalog import RING_SIZES, fixed_loops, plain, ring_graph, rotating_ring, split_orbits, with_source
from selfsim_app.core.certificates import replay_report
from selfsim_app.core.classifier import (
    NO,
    PURELY_INFINITE_LABEL,
    UNDETERMINED_LABEL,
    UNKNOWN,
    YES,
    classify,
    consistency_problems,
    infinite_vertices,
)
from selfsim_app.core.model import Graph
from selfsim_app.core.monoid import GROUP, NOT_GROUP


def _values(report) -> dict[str, str]:
    return {name: v.value for name, v in report.verdicts().items()}


@pytest.mark.parametrize("n", RING_SIZES)
def test_rotating_ring_is_kirchberg(n):
    report = classify(rotating_ring(n))
    assert _values(report) == {
        "pseudo_free": YES,
        "effectivity": YES,
        "minimal": YES,
        "simple": YES,
        "purely_infinite": YES,
        "stably_finite": NO,
    }
    assert report.dichotomy == PURELY_INFINITE_LABEL
    assert report.purely_infinite.witness.kind == "g_circuit"
    assert "Kirchberg" in report.purely_infinite.labels
    assert not report.trace.feasible
    assert report.monoid_quotient.verdict == GROUP
    assert report.monoid_quotient.heuristic
    assert consistency_problems(report) == []
    assert replay_report(rotating_ring(n), report) == []


def test_one_loop(one_loop_ssg):
    report = classify(one_loop_ssg)
    assert report.simple.value == NO
    assert report.simple.witness.kind == "circuit_without_entry"
    assert report.purely_infinite.value == UNKNOWN
    assert report.stably_finite.value == UNKNOWN
    assert report.trace.feasible
    assert report.monoid.verdict == NOT_GROUP
    assert report.dichotomy == UNDETERMINED_LABEL
    assert replay_report(one_loop_ssg, report) == []


def test_pseudo_freeness_failure_blocks_every_theorem(fixed_two_loops):
    report = classify(fixed_two_loops)
    assert report.pseudo_free.value == NO
    assert report.pseudo_free.witness.kind == "fixed_pair"
    for v in (report.simple, report.purely_infinite, report.stably_finite):
        assert v.value == UNKNOWN
        assert v.gap == "pseudo-freeness fails"
    # structural facts are still reported
    assert report.quotient.graph.vertices == ("[v]",)
    assert len(report.quotient.graph.edges) == 2
    assert report.g_circuit is not None
    assert replay_report(fixed_two_loops, report) == []


def test_swapped_loops(swapped):
    report = classify(swapped)
    assert report.simple.value == YES
    assert report.purely_infinite.value == YES
    assert report.dichotomy == PURELY_INFINITE_LABEL
    assert replay_report(swapped, report) == []


def test_split_orbits_is_not_simple():
    ssg = split_orbits()
    report = classify(ssg)
    assert report.minimal.value == NO
    assert report.minimal.witness.kind == "avoiding_cycle"
    assert report.effectivity.value == NO
    assert report.simple.value == NO
    assert report.purely_infinite.value == UNKNOWN
    assert report.stably_finite.value == UNKNOWN
    assert replay_report(ssg, report) == []


def test_sources_degrade_the_report():
    ssg = with_source()
    report = classify(ssg)
    assert report.banner is not None and report.banner.startswith("SourcePresent")
    assert report.pseudo_free.value == YES
    for name in ("effectivity", "minimal", "simple", "purely_infinite", "stably_finite"):
        verdict = report.verdicts()[name]
        assert verdict.value == UNKNOWN
        assert verdict.gap == "graph has sources"
    assert report.trace.exempt == ("s",)
    assert consistency_problems(report) == []


def test_plain_ring_is_simple():
    ssg = plain(ring_graph(3), "ring-plain-3")
    report = classify(ssg)
    assert report.simple.value == YES
    assert report.purely_infinite.value == YES
    assert replay_report(ssg, report) == []


def test_non_simple_pure_infiniteness_through_the_graph():
    ssg = plain(Graph.from_triples(
        ["u", "w"], [("a", "u", "u"), ("b", "u", "u"), ("c", "w", "w"), ("d", "w", "w")]
    ))
    report = classify(ssg)
    assert report.simple.value == NO
    assert report.purely_infinite.value == YES
    assert report.stably_finite.value == UNKNOWN
    assert replay_report(ssg, report) == []


def test_infinite_vertices(ring2):
    vertices = {iv.vertex: iv for iv in infinite_vertices(ring2)}
    assert all(iv.infinite for iv in vertices.values())
    assert vertices["v"].source in {"w1", "w2"}
    assert not vertices["v"].g_only


def test_swapped_loops_vertex_is_infinite(swapped):
    # the loops are ordinary circuits with an entry too
    (iv,) = infinite_vertices(swapped)
    assert iv.infinite and not iv.g_only


def test_progress_callback(ring2):
    lines: list[str] = []
    classify(ring2, log=lines.append)
    assert lines and all(line.startswith("ring-2") for line in lines)


def test_fixed_loop_consistency():
    report = classify(fixed_loops(1))
    assert consistency_problems(report) == []
