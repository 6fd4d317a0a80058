from __future__ import annotations

from dataclasses import replace

import pytest

from selfsim_app.core.catalog import catalog_instances, one_loop, plain, rotating_ring, two_loops
from selfsim_app.core.certificates import (
    PathOracle,
    has_cycle_within,
    is_move,
    naive_reach,
    pi_sufficient,
    replay_report,
    replay_witness,
)
from selfsim_app.core.classifier import Witness, classify
from selfsim_app.core.model import Graph, Path
from selfsim_app.core.monoid import MonoidElement, monoid_of
from selfsim_app.core.settings import AnalysisConfig

QUICK = AnalysisConfig(monoid_identity_bound=4, monoid_bound=12, monoid_state_cap=20_000)


def test_naive_reach_follows_received_edges():
    g = Graph.from_triples(["s", "u", "w"], [("a", "s", "u"), ("b", "u", "w")])
    assert naive_reach(g, "w") == {"s", "u", "w"}
    assert naive_reach(g, "s") == {"s"}


def test_has_cycle_within():
    g = Graph.from_triples(["u", "w"], [("a", "u", "w"), ("b", "w", "u")])
    assert has_cycle_within(g, {"u", "w"})
    assert not has_cycle_within(g, {"u"})


def test_pi_sufficient():
    assert pi_sufficient(two_loops())
    assert not pi_sufficient(one_loop())
    fed = Graph.from_triples(["s", "u"], [("a", "s", "s"), ("b", "s", "s"), ("c", "s", "u")])
    assert pi_sufficient(fed)


def test_oracle_sees_vertex_movement(ring2):
    oracle = PathOracle(ring2)
    assert oracle.moved_path("1", "w1") == Path.empty("w1")
    assert oracle.moved_path("1", "v") == Path.of("e1")
    assert not oracle.fixes_cylinder("1", "v")


@pytest.mark.parametrize("ssg", list(catalog_instances()), ids=lambda s: s.name)
def test_catalog_replays(ssg):
    report = classify(ssg, QUICK)
    assert replay_report(ssg, report) == []


class TestForgedWitnesses:
    def test_fixed_pair_on_moving_generator(self, swapped):
        assert not replay_witness(swapped, Witness("fixed_pair", {"g": "1", "edge": "a"}))
        assert not replay_witness(swapped, Witness("fixed_pair", {"g": "0", "edge": "a"}))

    def test_g_circuit_with_wrong_twist(self, ring2):
        assert replay_witness(ring2, Witness("g_circuit", {"path": Path.of("f1"), "twist": "1"}))
        assert not replay_witness(ring2, Witness("g_circuit", {"path": Path.of("f1"), "twist": "0"}))

    def test_circuit_with_an_entry(self, two_loops_ssg):
        w = Witness("circuit_without_entry", {"graph": "E", "path": Path.of("a")})
        assert not replay_witness(two_loops_ssg, w)

    def test_wrong_reach_map(self, two_cycle_ssg):
        w = Witness("reach_map", {"reach": {"u": ("u",), "w": ("u", "w")}})
        assert not replay_witness(two_cycle_ssg, w)

    def test_cylinder_fixed_claim_on_ring(self, ring2):
        assert not replay_witness(ring2, Witness("cylinder_fixed", {"g": "1", "vertex": "v"}))

    def test_pseudo_free_scan_on_fixed_loops(self, fixed_two_loops):
        assert not replay_witness(fixed_two_loops, Witness("exhaustive_scan", {"claim": "pseudo_free"}))

    def test_unknown_kind(self, ring2):
        with pytest.raises(ValueError):
            replay_witness(ring2, Witness("hunch", {}))

    def test_tampered_report(self):
        ssg = rotating_ring(2)
        report = classify(ssg, QUICK)
        report.purely_infinite = replace(report.purely_infinite, witness=Witness("g_circuit", {"path": Path.of("e1"), "twist": "1"}))
        assert replay_report(ssg, report) == ["purely_infinite"]


def test_monoid_moves():
    p = monoid_of(plain(two_loops()).graph)
    one = p.unit("v")
    two = MonoidElement((2,))
    assert is_move(p, one, two)
    assert is_move(p, two, one)
    assert not is_move(p, one, MonoidElement((3,)))
