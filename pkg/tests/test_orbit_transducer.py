from __future__ import annotations

import pytest
from hypothesis import given, settings

from selfsim_app.core.catalog import fixed_loops, split_orbits, with_source
from selfsim_app.core.certificates import triv_by_oracle
from selfsim_app.core.model import SourcePresentError, trivialize
from selfsim_app.core.orbit_transducer import (
    compute_triv,
    cylinder_condition_holds,
    deletion_round,
    is_pseudo_free,
)

from .strategies import self_similar_graphs


class TestPseudoFree:
    def test_ring_is_pseudo_free(self, ring3):
        res = is_pseudo_free(ring3)
        assert res.holds
        assert res.witness is None
        assert res.pairs_checked == 3 * len(ring3.graph.edges)

    def test_fixed_loop_witness(self):
        res = is_pseudo_free(fixed_loops(1))
        assert not res.holds
        assert res.witness == ("1", "l1")

    def test_trivial_group_is_pseudo_free(self, one_loop_ssg):
        assert is_pseudo_free(one_loop_ssg).holds


class TestTriv:
    def test_identity_always_present(self, ring2):
        triv = compute_triv(ring2)
        for v in ring2.graph.vertices:
            assert ("0", v) in triv

    def test_ring_moves_every_cylinder(self, ring2):
        triv = compute_triv(ring2)
        assert triv.nonidentity("0") == []
        assert cylinder_condition_holds(ring2).holds

    def test_fixed_loops_fix_their_cylinder(self, fixed_two_loops):
        res = cylinder_condition_holds(fixed_two_loops)
        assert not res.holds
        assert res.witness == ("1", "v")

    def test_swapped_loops_move_the_cylinder(self, swapped):
        assert cylinder_condition_holds(swapped).holds

    def test_split_orbits(self):
        # the generator swaps every vertex, so only the identity fixes anything
        assert compute_triv(split_orbits()).nonidentity("0") == []

    def test_result_is_a_fixed_point(self, ring3):
        triv = compute_triv(ring3)
        assert deletion_round(ring3, set(triv.pairs)) == set(triv.pairs)
        assert triv.rounds >= 1

    def test_sources_rejected(self):
        with pytest.raises(SourcePresentError):
            compute_triv(with_source())

    @settings(max_examples=80, deadline=None)
    @given(self_similar_graphs(max_orbits=2, max_edge_orbits=3))
    def test_agrees_with_path_oracle(self, ssg):
        assert set(compute_triv(ssg).pairs) == triv_by_oracle(ssg)

    @settings(max_examples=60, deadline=None)
    @given(self_similar_graphs())
    def test_trivializing_only_enlarges_triv(self, ssg):
        flat = trivialize(ssg)
        every_pair = {(g, v) for g in ssg.group.elements for v in ssg.graph.vertices}
        assert set(compute_triv(ssg).pairs) <= set(compute_triv(flat).pairs) == every_pair
