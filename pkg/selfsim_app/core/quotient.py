"""The orbit graph: one vertex per G-orbit, edges copied from the in-edges of a representative."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .model import Edge, Graph, InvalidPathError, Path, SelfSimilarGraph

logger = logging.getLogger(__name__)

EDGE_PREFIX = "~"


@dataclass(frozen=True, eq=False)
class QuotientGraph:
    graph: Graph
    orbit_of: dict[str, str]        # E-vertex -> quotient vertex
    rep: dict[str, str]             # quotient vertex -> representative E-vertex
    edge_origin: dict[str, str]     # quotient edge -> originating E-edge

    @property
    def tilde_of(self) -> dict[str, str]:
        """Originating E-edge -> quotient edge (defined on in-edges of representatives)."""
        return {origin: te for te, origin in self.edge_origin.items()}

    def summary(self) -> dict:
        return {
            "vertices": len(self.graph.vertices),
            "edges": len(self.graph.edges),
            "loops": sum(1 for e in self.graph.edges if e.d == e.r),
            "representatives": dict(self.rep),
        }


def class_name(rep: str) -> str:
    return f"[{rep}]"


def build_quotient(ssg: SelfSimilarGraph) -> QuotientGraph:
    """Representatives are the first orbit member in declaration order."""
    orbit_of: dict[str, str] = {}
    rep: dict[str, str] = {}
    for orbit in ssg.vertex_orbits:
        name = class_name(orbit[0])
        rep[name] = orbit[0]
        for v in orbit:
            orbit_of[v] = name

    edges: list[Edge] = []
    origin: dict[str, str] = {}
    for name, v in rep.items():
        for e in ssg.graph.in_edges(v):
            tid = f"{EDGE_PREFIX}{e}"
            edges.append(Edge(tid, orbit_of[ssg.graph.d(e)], name))
            origin[tid] = e

    graph = Graph(tuple(rep), tuple(edges))
    logger.debug("quotient: %d classes, %d edges", len(rep), len(edges))
    return QuotientGraph(graph, orbit_of, rep, origin)


def lift_path(ssg: SelfSimilarGraph, q: QuotientGraph, path: Path) -> Path:
    """A path in E whose i-th edge lies in the orbit of the i-th originating edge.

    ``gamma_1 = a_1`` and ``gamma_i = g_1 ... g_{i-1} . a_i`` where
    ``d(a_i) = g_i . r(a_{i+1})``.
    """
    q.graph.check_path(path)
    if not path.edges:
        return Path.empty(q.rep[str(path.anchor)])
    origins = [q.edge_origin[te] for te in path.edges]
    out = [origins[0]]
    acc = ssg.group.identity
    for prev, cur in zip(origins, origins[1:]):
        g = ssg.transporter(ssg.graph.r(cur), ssg.graph.d(prev))
        if g is None:
            raise InvalidPathError(f"{prev} and {cur} do not compose up to orbit")
        acc = ssg.group.mul(acc, g)
        out.append(ssg.act_edge(acc, cur))
    return Path(tuple(out))


def push_path(ssg: SelfSimilarGraph, q: QuotientGraph, path: Path) -> Path:
    """Image of an E-path in the quotient; inverts :func:`lift_path` on quotient paths."""
    ssg.graph.check_path(path)
    if not path.edges:
        return Path.empty(q.orbit_of[str(path.anchor)])
    tilde = q.tilde_of
    first = path.edges[0]
    # K_i moves gamma_i onto an in-edge of its representative
    k = ssg.transporter(ssg.graph.r(first), q.rep[q.orbit_of[ssg.graph.r(first)]])
    assert k is not None
    out: list[str] = []
    for i, e in enumerate(path.edges):
        if i:
            prev_origin = q.edge_origin[out[-1]]
            target_rep = q.rep[q.orbit_of[ssg.graph.r(e)]]
            g = ssg.transporter(target_rep, ssg.graph.d(prev_origin))
            assert g is not None
            k = ssg.group.mul(ssg.group.inv(g), k)
        out.append(tilde[ssg.act_edge(k, e)])
    return Path(tuple(out))
