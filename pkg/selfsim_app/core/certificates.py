"""Independent replay of verdict witnesses.

Nothing here reuses the searches that produced a witness: reachability is a
plain depth-first walk, cycles are found by colouring, and the cylinder
claims go through a bounded path-fixing oracle instead of the fixed point.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .classifier import ClassificationReport, Witness
from .graph_analysis import GCircuitWitness, find_circuits, unroll_g_circuit
from .model import Graph, Path, SelfSimilarGraph
from .monoid import GROUP, NOT_GROUP, GroupTestVerdict, MonoidElement, MonoidPresentation, monoid_of
from .quotient import build_quotient
from .trace_lp import TraceResult, certifies_no_trace, is_trace

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# naive graph facts
# ---------------------------------------------------------------------------


def naive_reach(graph: Graph, v: str) -> set[str]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for e in graph.in_edges(x):
            y = graph.d(e)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def has_cycle_within(graph: Graph, allowed: set[str]) -> bool:
    """A closed path all of whose vertices lie in ``allowed``."""
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {v: WHITE for v in allowed}

    def visit(x: str) -> bool:
        colour[x] = GREY
        for e in graph.in_edges(x):
            y = graph.d(e)
            if y not in colour:
                continue
            if colour[y] == GREY:
                return True
            if colour[y] == WHITE and visit(y):
                return True
        colour[x] = BLACK
        return False

    return any(colour[v] == WHITE and visit(v) for v in graph.vertices if v in allowed)


def _closed(graph: Graph, path: Path) -> bool:
    return bool(path.edges) and graph.is_path(path) and graph.path_domain(path) == graph.path_range(path)


def _is_g_circuit(ssg: SelfSimilarGraph, path: Path, twist: str) -> bool:
    if not path.edges or not ssg.graph.is_path(path):
        return False
    return ssg.graph.path_domain(path) == ssg.act_vertex(twist, ssg.graph.path_range(path))


def _entry_on(graph: Graph, path: Path) -> bool:
    return any(graph.in_degree(x) >= 2 for x in graph.vertex_trace(path)[:-1])


def on_some_cycle(graph: Graph) -> set[str]:
    return {y for y in graph.vertices if any(y in naive_reach(graph, graph.d(e)) for e in graph.in_edges(y))}


def pi_sufficient(graph: Graph) -> bool:
    single = {v for v in graph.vertices if graph.in_degree(v) == 1}
    if has_cycle_within(graph, single):
        return False
    cyc = on_some_cycle(graph)
    return all(naive_reach(graph, v) & cyc for v in graph.vertices)


# ---------------------------------------------------------------------------
# bounded path-fixing oracle
# ---------------------------------------------------------------------------


@dataclass
class PathOracle:
    """Finds a path moved by ``g`` among the paths of bounded length with range ``v``."""

    ssg: SelfSimilarGraph
    depth: int = 0
    _memo: dict[tuple[str, str, int], Path | None] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.depth:
            self.depth = self.ssg.group.order * len(self.ssg.graph.vertices) + 1

    def moved_path(self, g: str, v: str, depth: int | None = None) -> Path | None:
        k = self.depth if depth is None else depth
        key = (g, v, k)
        if key not in self._memo:
            self._memo[key] = self._search(g, v, k)
        return self._memo[key]

    def _search(self, g: str, v: str, k: int) -> Path | None:
        ssg = self.ssg
        if ssg.act_vertex(g, v) != v:
            return Path.empty(v)
        if k == 0:
            return None
        for e in ssg.graph.in_edges(v):
            if ssg.act_edge(g, e) != e:
                return Path.of(e)
            tail = self.moved_path(ssg.restrict(g, e), ssg.graph.d(e), k - 1)
            if tail is not None and tail.edges:
                return Path((e,) + tail.edges)
        return None

    def fixes_cylinder(self, g: str, v: str) -> bool:
        return self.moved_path(g, v) is None


def triv_by_oracle(ssg: SelfSimilarGraph) -> set[tuple[str, str]]:
    oracle = PathOracle(ssg)
    return {(g, v) for g in ssg.group.elements for v in ssg.graph.vertices if oracle.fixes_cylinder(g, v)}


# ---------------------------------------------------------------------------
# witness replay
# ---------------------------------------------------------------------------


def _scan(ssg: SelfSimilarGraph, claim: str) -> bool:
    one = ssg.group.identity
    others = [g for g in ssg.group.elements if g != one]
    if claim == "pseudo_free":
        return not any(
            ssg.act_edge(g, e.id) == e.id and ssg.restrict(g, e.id) == one
            for g in others for e in ssg.graph.edges
        )
    if claim == "cylinders_moved":
        oracle = PathOracle(ssg)
        return all(
            not oracle.fixes_cylinder(g, v)
            for g in others for v in ssg.graph.vertices if ssg.act_vertex(g, v) == v
        )
    if claim == "g_circuit_entries":
        qg = build_quotient(ssg).graph
        return all(_entry_on(qg, c.path) for c in find_circuits(qg))
    raise ValueError(f"unknown scan claim {claim!r}")


def replay_witness(ssg: SelfSimilarGraph, witness: Witness) -> bool:
    kind, data = witness.kind, witness.data
    graph = ssg.graph
    one = ssg.group.identity

    if kind == "conjunction":
        return all(part is not None and replay_witness(ssg, part) for part in data["parts"])
    if kind == "exhaustive_scan":
        return _scan(ssg, data["claim"])
    if kind == "fixed_pair":
        g, e = data["g"], data["edge"]
        return g != one and ssg.act_edge(g, e) == e and ssg.restrict(g, e) == one
    if kind == "g_circuit":
        path, twist = data["path"], data["twist"]
        if not _is_g_circuit(ssg, path, twist):
            return False
        return graph.is_path(unroll_g_circuit(ssg, GCircuitWitness(path, twist), ssg.group.order + 1))
    if kind == "g_circuit_without_entry":
        path = data["path"]
        return _is_g_circuit(ssg, path, data["twist"]) and not _entry_on(graph, path)
    if kind == "cylinder_fixed":
        g, v = data["g"], data["vertex"]
        return g != one and ssg.act_vertex(g, v) == v and PathOracle(ssg).fixes_cylinder(g, v)
    if kind == "circuit_without_entry":
        target = build_quotient(ssg).graph if data["graph"] == "quotient" else graph
        return _closed(target, data["path"]) and not _entry_on(target, data["path"])
    if kind == "avoiding_cycle":
        target = build_quotient(ssg).graph if data["graph"] == "quotient" else graph
        cycle, v = data["cycle"], data["vertex"]
        if cycle is None or not _closed(target, cycle):
            return False
        starts = ssg.vertex_orbit(v) if data.get("orbit") else (v,)
        reach = set().union(*(naive_reach(target, s) for s in starts))
        return not set(target.vertex_trace(cycle)) & reach
    if kind == "reach_map":
        for v, claimed in data["reach"].items():
            reach = set().union(*(naive_reach(graph, s) for s in ssg.vertex_orbit(v)))
            if set(claimed) != reach:
                return False
            if has_cycle_within(graph, set(graph.vertices) - reach):
                return False
        return True
    if kind == "acyclic_quotient":
        qg = build_quotient(ssg).graph
        return not has_cycle_within(qg, set(qg.vertices))
    if kind == "g_path_cover":
        for v in graph.vertices:
            if v not in data["cover"]:
                return False
            path, source, circuit = data["cover"][v]
            if path is None or circuit is None or not graph.is_path(path):
                return False
            if graph.path_range(path) != v or graph.path_domain(path) != source:
                return False
            if graph.path_range(circuit.path) != source:
                return False
            if not _is_g_circuit(ssg, circuit.path, circuit.twist) or not _entry_on(graph, circuit.path):
                return False
        return True
    if kind == "criterion":
        target = build_quotient(ssg).graph if data["graph"] == "quotient" else graph
        if data["name"] != "pi_sufficient":
            raise ValueError(f"unknown criterion {data['name']!r}")
        return pi_sufficient(target)
    raise ValueError(f"unknown witness kind {kind!r}")


def replay_trace(graph: Graph, result: TraceResult, orbits=None) -> bool:
    if result.solution is not None:
        return result.solution.normalization == Fraction(1) and is_trace(graph, result.solution, orbits)
    return result.certificate is not None and certifies_no_trace(graph, result.certificate, orbits)


def is_move(p: MonoidPresentation, x: MonoidElement, y: MonoidElement) -> bool:
    """``y`` is ``x`` with one generator replaced by its relation image, or the reverse."""
    n = len(p.generators)
    for rel in p.relations:
        unit = MonoidElement.unit(n, rel.vertex)
        image = MonoidElement(rel.image)
        for a, b in ((x, y), (y, x)):
            if a.dominates(unit) and (a - unit) + image == b:
                return True
    return False


def _chain_ok(p: MonoidPresentation, chain: tuple[MonoidElement, ...], start: MonoidElement, end: MonoidElement) -> bool:
    if not chain or chain[0] != start or chain[-1] != end:
        return False
    return all(is_move(p, a, b) for a, b in zip(chain, chain[1:]))


def replay_group_test(p: MonoidPresentation, verdict: GroupTestVerdict) -> bool:
    if verdict.verdict == NOT_GROUP:
        return verdict.trace is not None and verdict.trace.solution is not None and replay_trace(p.graph, verdict.trace)
    if verdict.verdict == GROUP:
        f = verdict.identity
        if f is None or f.is_zero:
            return False
        for v in p.generators:
            a = p.unit(v)
            x = verdict.inverses.get(v)
            if x is None or x.is_zero:
                return False
            if not _chain_ok(p, verdict.identity_chains.get(v, ()), a, f + a):
                return False
            if not _chain_ok(p, verdict.inverse_chains.get(v, ()), f, a + x):
                return False
        return True
    return True


def replay_report(ssg: SelfSimilarGraph, report: ClassificationReport) -> list[str]:
    """Names of the parts whose evidence fails to replay."""
    failures: list[str] = []
    for name, verdict in report.verdicts().items():
        if not verdict.decided:
            continue
        if verdict.witness is None or not replay_witness(ssg, verdict.witness):
            failures.append(name)
    if not replay_trace(ssg.graph, report.trace, ssg.vertex_orbits):
        failures.append("trace")
    if not replay_group_test(monoid_of(ssg.graph), report.monoid):
        failures.append("monoid")
    if not replay_group_test(monoid_of(build_quotient(ssg).graph), report.monoid_quotient):
        failures.append("monoid_quotient")
    if failures:
        logger.warning("%s: witnesses failed to replay: %s", report.name, ", ".join(failures))
    return failures
