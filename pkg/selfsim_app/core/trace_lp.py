"""Graph traces and graph G-traces as exact rational feasibility problems.

A graph trace is a weighting ``T >= 0`` of the vertices with
``T(r(e)) >= T(d(e))`` for every edge, ``T(v) = sum T(d(e))`` over the edges
received at ``v`` and ``sum T = 1``. Balance is only imposed at vertices that
receive an edge; unreceiving vertices are exempt and reported as such. A
G-trace is additionally constant on vertex orbits.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_lp import check_farkas, check_solution, solve_feasibility
from .model import Graph, SelfSimilarGraph

logger = logging.getLogger(__name__)

Label = tuple[str, ...]


@dataclass(frozen=True)
class TraceSolution:
    weights: dict[str, Fraction]

    @property
    def normalization(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def as_strings(self) -> dict[str, str]:
        return {v: str(t) for v, t in self.weights.items()}


@dataclass(frozen=True)
class FarkasCertificate:
    """Nonzero row multipliers, keyed by constraint label."""

    multipliers: tuple[tuple[Label, Fraction], ...]

    def as_strings(self) -> dict[str, str]:
        return {":".join(label): str(y) for label, y in self.multipliers}


@dataclass(frozen=True)
class TraceSystem:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    labels: tuple[Label, ...]
    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]
    exempt: tuple[str, ...] = ()


@dataclass(frozen=True)
class TraceResult:
    solution: TraceSolution | None
    certificate: FarkasCertificate | None = None
    g_invariant: bool = False
    exempt: tuple[str, ...] = field(default=())

    @property
    def feasible(self) -> bool:
        return self.solution is not None

    @property
    def note(self) -> str:
        if not self.exempt:
            return "balance imposed at every vertex"
        return "balance exempted at unreceiving vertices: " + ", ".join(self.exempt)


def trace_system(graph: Graph, orbits: Sequence[Sequence[str]] | None = None) -> TraceSystem:
    """Rows of ``A x = b`` over ``x = (T_v for v) + (s_e for e)``; ``s_e`` is the monotonicity slack."""
    V = graph.vertices
    E = [e.id for e in graph.edges]
    nv, ne = len(V), len(E)
    vi = graph.vertex_index
    labels: list[Label] = []
    rows: list[tuple[Fraction, ...]] = []
    rhs: list[Fraction] = []

    def add(label: Label, coeffs: dict[int, int], value: int = 0) -> None:
        row = [Fraction(0)] * (nv + ne)
        for j, c in coeffs.items():
            row[j] += c
        labels.append(label)
        rows.append(tuple(row))
        rhs.append(Fraction(value))

    exempt: list[str] = []
    for v in V:
        received = graph.in_edges(v)
        if not received:
            exempt.append(v)
            continue
        coeffs: dict[int, int] = {vi[v]: 1}
        for e in received:
            j = vi[graph.d(e)]
            coeffs[j] = coeffs.get(j, 0) - 1
        add(("balance", v), coeffs)

    for k, e in enumerate(graph.edges):
        coeffs = {vi[e.r]: 1}
        coeffs[vi[e.d]] = coeffs.get(vi[e.d], 0) - 1
        coeffs[nv + k] = -1
        add(("monotone", e.id), coeffs)

    for orbit in orbits or ():
        head = orbit[0]
        for v in orbit[1:]:
            add(("orbit", v), {vi[v]: 1, vi[head]: -1})

    add(("normalize",), {vi[v]: 1 for v in V}, 1)
    return TraceSystem(V, tuple(E), tuple(labels), tuple(rows), tuple(rhs), tuple(exempt))


def _solve(system: TraceSystem, g_invariant: bool) -> TraceResult:
    result = solve_feasibility(system.A, system.b)
    if result.feasible:
        assert result.x is not None
        weights = {v: result.x[i] for i, v in enumerate(system.vertices)}
        logger.debug("trace found after %d pivots", result.pivots)
        return TraceResult(TraceSolution(weights), None, g_invariant, system.exempt)
    assert result.farkas is not None
    mult = tuple((label, y) for label, y in zip(system.labels, result.farkas) if y != 0)
    logger.debug("no trace; certificate uses %d rows", len(mult))
    return TraceResult(None, FarkasCertificate(mult), g_invariant, system.exempt)


def solve_graph_trace(graph: Graph) -> TraceResult:
    return _solve(trace_system(graph), False)


def solve_graph_g_trace(ssg: SelfSimilarGraph) -> TraceResult:
    return _solve(trace_system(ssg.graph, ssg.vertex_orbits), True)


def graph_trace_exists(graph: Graph) -> TraceSolution | None:
    return solve_graph_trace(graph).solution


def graph_g_trace_exists(ssg: SelfSimilarGraph) -> TraceSolution | None:
    return solve_graph_g_trace(ssg).solution


def pull_back(ssg: SelfSimilarGraph, orbit_of: dict[str, str], quotient_trace: TraceSolution) -> TraceSolution:
    """``T'(v) = T([v])``, rescaled to total weight one."""
    raw = {v: quotient_trace.weights[orbit_of[v]] for v in ssg.graph.vertices}
    total = sum(raw.values(), Fraction(0))
    return TraceSolution({v: t / total for v, t in raw.items()})


def is_trace(graph: Graph, solution: TraceSolution, orbits: Sequence[Sequence[str]] | None = None) -> bool:
    """Exact check of every constraint, slacks included."""
    system = trace_system(graph, orbits)
    if set(solution.weights) != set(system.vertices):
        return False
    T = [solution.weights[v] for v in system.vertices]
    slacks = [solution.weights[e.r] - solution.weights[e.d] for e in graph.edges]
    return check_solution(system.A, system.b, T + slacks)


def certifies_no_trace(
    graph: Graph, certificate: FarkasCertificate, orbits: Sequence[Sequence[str]] | None = None
) -> bool:
    system = trace_system(graph, orbits)
    by_label = dict(certificate.multipliers)
    if not set(by_label) <= set(system.labels):
        return False
    y = [by_label.get(label, Fraction(0)) for label in system.labels]
    return check_farkas(system.A, system.b, y)
