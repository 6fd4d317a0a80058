"""Circuits, entries, reachability and cofinality on plain graphs and on G-graphs.

Networkx views of a graph carry one arc ``r(e) -> d(e)`` per edge (see
``Graph.to_networkx``), so "v receives a path from w" is "w is a descendant
of v" and an elementary circuit is a simple cycle read in path order.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Iterable
from dataclasses import dataclass

import networkx as nx

from .model import Graph, Path, SelfSimilarGraph, extend_action

logger = logging.getLogger(__name__)

DEFAULT_CIRCUIT_CAP = 1_000_000


class ResourceExceededError(RuntimeError):
    """Raised when circuit enumeration exceeds its cap."""


@dataclass(frozen=True)
class Circuit:
    path: Path
    vertices: tuple[str, ...]
    has_entry: bool


@dataclass(frozen=True)
class GCircuitWitness:
    path: Path
    twist: str          # d(path) = twist . r(path)


@dataclass(frozen=True)
class ReachabilityRelation:
    pairs: frozenset[tuple[str, str]]   # (v, w): v receives a G-path from w

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def below(self, v: str) -> set[str]:
        return {w for (x, w) in self.pairs if x == v}


@dataclass(frozen=True)
class CofinalityResult:
    holds: bool
    vertex: str | None = None          # the vertex an infinite path avoids
    cycle: Path | None = None          # a cycle the avoiding infinite path winds around
    sources_present: bool = False


@dataclass(frozen=True)
class CriterionResult:
    holds: bool
    reason: str = ""
    circuit: Path | None = None        # circuit without entry
    vertex: str | None = None          # vertex avoided / not below a circuit
    cycle: Path | None = None


# ---------------------------------------------------------------------------
# reachability
# ---------------------------------------------------------------------------


def reachable_from(graph: Graph, v: str) -> set[str]:
    """``R(v)``: every ``w`` such that ``v`` receives a path from ``w`` (``v`` included)."""
    graph.in_edges(v)
    return {v} | nx.descendants(graph.nx_graph, v)


def _bfs_path(graph: Graph, start: str, targets: Callable[[str], bool], nonempty: bool) -> Path | None:
    """Shortest path with range ``start`` whose domain satisfies ``targets``."""
    if not nonempty and targets(start):
        return Path.empty(start)
    # prev is None for edges received at start itself
    parent: dict[str, tuple[str | None, str]] = {}
    queue: deque[str] = deque()
    for e in graph.in_edges(start):
        x = graph.d(e)
        if x not in parent:
            parent[x] = (None, e)
            queue.append(x)
    while queue:
        x = queue.popleft()
        if targets(x):
            edges: list[str] = []
            cur: str | None = x
            while cur is not None:
                prev, e = parent[cur]
                edges.append(e)
                cur = prev
            return Path(tuple(reversed(edges)))
        for e in graph.in_edges(x):
            y = graph.d(e)
            if y not in parent:
                parent[y] = (x, e)
                queue.append(y)
    return None


def path_into(graph: Graph, start: str, targets: set[str]) -> Path | None:
    """Shortest path, possibly empty, with range ``start`` and domain in ``targets``."""
    return _bfs_path(graph, start, targets.__contains__, nonempty=False)


def g_path(ssg: SelfSimilarGraph, v: str, w: str) -> tuple[Path, str] | None:
    """``(alpha, g)`` with ``r(alpha) = v`` and ``d(alpha) = g.w``, shortest first."""
    orbit = set(ssg.vertex_orbit(w))
    path = _bfs_path(ssg.graph, v, lambda x: x in orbit, nonempty=False)
    if path is None:
        return None
    g = ssg.transporter(w, ssg.graph.path_domain(path))
    assert g is not None
    return path, g


def g_reaches(ssg: SelfSimilarGraph) -> ReachabilityRelation:
    """The G-path order: ``(v, w)`` iff some ``alpha``, ``g`` have ``r(alpha) = v``, ``d(alpha) = g.w``."""
    pairs: set[tuple[str, str]] = set()
    for v in ssg.graph.vertices:
        reach = reachable_from(ssg.graph, v)
        for w in ssg.graph.vertices:
            if reach.intersection(ssg.vertex_orbit(w)):
                pairs.add((v, w))
    return ReachabilityRelation(frozenset(pairs))


def receives_g_path_alt(ssg: SelfSimilarGraph) -> ReachabilityRelation:
    """Same order in the form ``r(alpha) = g.v`` and ``d(alpha) = w``."""
    pairs: set[tuple[str, str]] = set()
    for v in ssg.graph.vertices:
        reach: set[str] = set()
        for gv in ssg.vertex_orbit(v):
            reach |= reachable_from(ssg.graph, gv)
        pairs.update((v, w) for w in reach)
    return ReachabilityRelation(frozenset(pairs))


def g_reaches_via_quotient(ssg: SelfSimilarGraph, quotient_graph: Graph, orbit_of: dict[str, str]) -> ReachabilityRelation:
    """The G-path order pulled back from reachability between classes of the quotient."""
    reach = {c: reachable_from(quotient_graph, c) for c in quotient_graph.vertices}
    pairs = {
        (v, w)
        for v in ssg.graph.vertices
        for w in ssg.graph.vertices
        if orbit_of[w] in reach[orbit_of[v]]
    }
    return ReachabilityRelation(frozenset(pairs))


# ---------------------------------------------------------------------------
# circuits
# ---------------------------------------------------------------------------


def has_entry(graph: Graph, path: Path) -> bool:
    """Some vertex on the circuit receives a second edge."""
    return any(graph.in_degree(graph.r(e)) >= 2 for e in path.edges)


def _canonical_rotation(cycle: list[str], order: dict[str, int]) -> tuple[str, ...]:
    k = min(range(len(cycle)), key=lambda i: order[cycle[i]])
    return tuple(cycle[k:] + cycle[:k])


def find_circuits(graph: Graph, cap: int = DEFAULT_CIRCUIT_CAP) -> list[Circuit]:
    """Elementary circuits, one per vertex cycle, with the first parallel edge at each step."""
    first_edge: dict[tuple[str, str], str] = {}
    for e in graph.edges:
        first_edge.setdefault((e.r, e.d), e.id)
    dg = nx.DiGraph()
    dg.add_nodes_from(graph.vertices)
    dg.add_edges_from(first_edge)
    order = graph.vertex_index
    cycles: list[tuple[str, ...]] = []
    for count, cyc in enumerate(nx.simple_cycles(dg), start=1):
        if count > cap:
            raise ResourceExceededError(f"more than {cap} elementary circuits")
        cycles.append(_canonical_rotation(list(cyc), order))
    cycles.sort(key=lambda c: (len(c), [order[v] for v in c]))
    out: list[Circuit] = []
    for cyc in cycles:
        edges = tuple(first_edge[(cyc[i], cyc[(i + 1) % len(cyc)])] for i in range(len(cyc)))
        path = Path(edges)
        out.append(Circuit(path, cyc, has_entry(graph, path)))
    logger.debug("found %d elementary circuits", len(out))
    return out


def _entryless_closed_chain(graph: Graph, same_class: Callable[[str, str], bool]) -> Path | None:
    """Follow unique in-edges through in-degree-1 vertices until the chain closes up to class."""
    for u in graph.vertices:
        if graph.in_degree(u) != 1:
            continue
        x = u
        edges: list[str] = []
        for _ in range(len(graph.vertices)):
            (e,) = graph.in_edges(x)
            edges.append(e)
            x = graph.d(e)
            if same_class(u, x):
                return Path(tuple(edges))
            if graph.in_degree(x) != 1:
                break
    return None


def find_circuit_without_entry(graph: Graph) -> Path | None:
    return _entryless_closed_chain(graph, lambda a, b: a == b)


def find_g_circuit(ssg: SelfSimilarGraph) -> GCircuitWitness | None:
    """A nonempty path whose domain lies in the orbit of its range."""
    for u in ssg.graph.vertices:
        orbit = set(ssg.vertex_orbit(u))
        path = _bfs_path(ssg.graph, u, lambda x: x in orbit, nonempty=True)
        if path is not None:
            twist = ssg.transporter(u, ssg.graph.path_domain(path))
            assert twist is not None
            return GCircuitWitness(path, twist)
    return None


def g_circuit_vertices(ssg: SelfSimilarGraph) -> dict[str, GCircuitWitness]:
    """Vertices lying on a G-circuit, each with a G-circuit starting there."""
    out: dict[str, GCircuitWitness] = {}
    for w in ssg.graph.vertices:
        orbit = set(ssg.vertex_orbit(w))
        path = _bfs_path(ssg.graph, w, lambda x: x in orbit, nonempty=True)
        if path is not None:
            twist = ssg.transporter(w, ssg.graph.path_domain(path))
            assert twist is not None
            out[w] = GCircuitWitness(path, twist)
    return out


def g_circuit_with_entry_at(ssg: SelfSimilarGraph, w: str) -> GCircuitWitness | None:
    """A G-circuit with range ``w`` passing a vertex that receives two or more edges."""
    graph = ssg.graph
    orbit = set(ssg.vertex_orbit(w))
    for x in graph.vertices:
        if graph.in_degree(x) < 2:
            continue
        head = _bfs_path(graph, w, lambda y: y == x, nonempty=False)
        if head is None:
            continue
        tail = _bfs_path(graph, x, lambda y: y in orbit, nonempty=not head.edges)
        if tail is None:
            continue
        path = Path(head.edges + tail.edges)
        twist = ssg.transporter(w, graph.path_domain(path))
        assert twist is not None
        return GCircuitWitness(path, twist)
    return None


def find_g_circuit_without_entry(ssg: SelfSimilarGraph) -> GCircuitWitness | None:
    orbit = ssg.vertex_orbit
    path = _entryless_closed_chain(ssg.graph, lambda a, b: b in orbit(a))
    if path is None:
        return None
    twist = ssg.transporter(ssg.graph.path_range(path), ssg.graph.path_domain(path))
    assert twist is not None
    return GCircuitWitness(path, twist)


def every_g_circuit_has_entry(ssg: SelfSimilarGraph) -> bool:
    return find_g_circuit_without_entry(ssg) is None


def unroll_g_circuit(ssg: SelfSimilarGraph, witness: GCircuitWitness, blocks: int) -> Path:
    """``alpha (g alpha) (g^2 alpha) ...`` truncated to ``blocks`` copies."""
    edges: list[str] = []
    power = ssg.group.identity
    for _ in range(blocks):
        moved, _ = extend_action(ssg, power, witness.path)
        edges.extend(moved.edges)
        power = ssg.group.mul(witness.twist, power)
    return Path(tuple(edges))


# ---------------------------------------------------------------------------
# cofinality
# ---------------------------------------------------------------------------


def _cofinality(graph: Graph, reach_sets: Iterable[tuple[str, set[str]]]) -> CofinalityResult:
    nxg = graph.nx_graph
    sources_present = not graph.source_free
    for v, reach in reach_sets:
        outside = [x for x in graph.vertices if x not in reach]
        if not outside:
            continue
        try:
            arcs = nx.find_cycle(nxg.subgraph(outside))
        except nx.NetworkXNoCycle:
            continue
        cycle = Path(tuple(key for (_, _, key) in arcs))
        return CofinalityResult(False, v, cycle, sources_present)
    return CofinalityResult(True, sources_present=sources_present)


def is_cofinal(graph: Graph) -> CofinalityResult:
    """Every infinite path eventually enters ``R(v)``, for every ``v``.

    With sources present the answer covers the infinite paths that exist and
    is flagged.
    """
    result = _cofinality(graph, ((v, reachable_from(graph, v)) for v in graph.vertices))
    if result.sources_present:
        logger.info("cofinality computed on a graph with sources")
    return result


def is_weakly_g_transitive(ssg: SelfSimilarGraph, *, require_source_free: bool = True) -> CofinalityResult:
    if require_source_free:
        ssg.graph.require_source_free()

    def reach_sets() -> Iterable[tuple[str, set[str]]]:
        for v in ssg.graph.vertices:
            reach: set[str] = set()
            for gv in ssg.vertex_orbit(v):
                reach |= reachable_from(ssg.graph, gv)
            yield v, reach

    return _cofinality(ssg.graph, reach_sets())


# ---------------------------------------------------------------------------
# graph algebra criteria
# ---------------------------------------------------------------------------


def graph_algebra_simple(graph: Graph) -> CriterionResult:
    """Cofinal and every circuit has an entry (finite, source-free graphs)."""
    graph.require_source_free()
    bad = find_circuit_without_entry(graph)
    if bad is not None:
        return CriterionResult(False, "circuit without entry", circuit=bad)
    cof = is_cofinal(graph)
    if not cof.holds:
        return CriterionResult(False, "not cofinal", vertex=cof.vertex, cycle=cof.cycle)
    return CriterionResult(True, "cofinal and every circuit has an entry")


def circuit_vertices(graph: Graph) -> set[str]:
    nxg = graph.nx_graph
    out: set[str] = set()
    for comp in nx.strongly_connected_components(nxg):
        if len(comp) > 1:
            out |= comp
    out |= {e.r for e in graph.edges if e.r == e.d}
    return out


def graph_algebra_pi_sufficient(graph: Graph) -> CriterionResult:
    """Every circuit has an entry and every vertex receives a path from a circuit."""
    bad = find_circuit_without_entry(graph)
    if bad is not None:
        return CriterionResult(False, "circuit without entry", circuit=bad)
    on_circuit = circuit_vertices(graph)
    for v in graph.vertices:
        if not reachable_from(graph, v) & on_circuit:
            return CriterionResult(False, "vertex not reached from a circuit", vertex=v)
    return CriterionResult(True, "every circuit has an entry and every vertex is reached from a circuit")


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())
