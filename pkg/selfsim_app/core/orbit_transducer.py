"""Fixed-point computations over G x E: pseudo-freeness and trivial cylinder actions.

``(g, v)`` belongs to the trivial set when ``g`` fixes every infinite path
received at ``v``. On a finite graph this is the greatest set of pairs closed
under: ``g.v = v`` and, for each ``e`` received at ``v``, ``g.e = e`` and
``(phi(g, e), d(e))`` is again in the set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .model import SelfSimilarGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PseudoFreeResult:
    holds: bool
    witness: tuple[str, str] | None = None   # (g, e) with g.e = e, phi(g, e) = 1, g != 1
    pairs_checked: int = 0


@dataclass(frozen=True)
class TrivSet:
    pairs: frozenset[tuple[str, str]]
    rounds: int = 0

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def nonidentity(self, identity: str) -> list[tuple[str, str]]:
        return sorted(p for p in self.pairs if p[0] != identity)


@dataclass(frozen=True)
class CylinderResult:
    holds: bool
    witness: tuple[str, str] | None = None   # (g, v): g != 1 fixes all of Z(v)
    triv: TrivSet | None = None


def is_pseudo_free(ssg: SelfSimilarGraph) -> PseudoFreeResult:
    """``g.e = e`` and ``phi(g, e) = 1`` force ``g = 1``; exhaustive over G x E."""
    one = ssg.group.identity
    checked = 0
    for g in ssg.group.elements:
        for edge in ssg.graph.edges:
            checked += 1
            if g == one:
                continue
            if ssg.act_edge(g, edge.id) == edge.id and ssg.restrict(g, edge.id) == one:
                logger.debug("pseudo-freeness fails at (%s, %s)", g, edge.id)
                return PseudoFreeResult(False, (g, edge.id), checked)
    return PseudoFreeResult(True, None, checked)


def _survives(ssg: SelfSimilarGraph, pairs: set[tuple[str, str]], g: str, v: str) -> bool:
    for e in ssg.graph.in_edges(v):
        if ssg.act_edge(g, e) != e:
            return False
        if (ssg.restrict(g, e), ssg.graph.d(e)) not in pairs:
            return False
    return True


def deletion_round(ssg: SelfSimilarGraph, pairs: set[tuple[str, str]]) -> set[tuple[str, str]]:
    """One synchronous deletion pass; a fixed point is returned unchanged."""
    return {(g, v) for (g, v) in pairs if _survives(ssg, pairs, g, v)}


def compute_triv(ssg: SelfSimilarGraph) -> TrivSet:
    """Greatest fixed point, by deletion from ``{(g, v) : g.v = v}``."""
    ssg.graph.require_source_free()
    pairs = {
        (g, v)
        for g in ssg.group.elements
        for v in ssg.graph.vertices
        if ssg.act_vertex(g, v) == v
    }
    rounds = 0
    while True:
        rounds += 1
        nxt = deletion_round(ssg, pairs)
        if nxt == pairs:
            break
        logger.debug("triv round %d: %d -> %d pairs", rounds, len(pairs), len(nxt))
        pairs = nxt
    return TrivSet(frozenset(pairs), rounds)


def cylinder_condition_holds(ssg: SelfSimilarGraph) -> CylinderResult:
    """Every ``g != 1`` moves some infinite path in every cylinder ``Z(v)``."""
    triv = compute_triv(ssg)
    offending = triv.nonidentity(ssg.group.identity)
    if offending:
        return CylinderResult(False, offending[0], triv)
    return CylinderResult(True, None, triv)
