"""Decision tree from component analyses to the final classification report.

Every verdict is three-valued. Yes and No carry a witness that
``certificates.replay_witness`` re-checks on its own; Unknown carries the
reason no rule applied.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from typing import Any

from .graph_analysis import (
    Circuit,
    GCircuitWitness,
    circuit_vertices,
    find_circuits,
    find_g_circuit,
    find_g_circuit_without_entry,
    g_circuit_with_entry_at,
    graph_algebra_pi_sufficient,
    graph_algebra_simple,
    is_weakly_g_transitive,
    path_into,
    reachable_from,
)
from .model import Path, SelfSimilarGraph
from .monoid import GROUP, NOT_GROUP, GroupTestVerdict, is_group_nonzero, monoid_of
from .orbit_transducer import CylinderResult, cylinder_condition_holds, is_pseudo_free
from .quotient import QuotientGraph, build_quotient
from .settings import AnalysisConfig
from .trace_lp import TraceResult, solve_graph_g_trace

logger = logging.getLogger(__name__)

LogFn = Callable[[str], None] | None

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"

PURELY_INFINITE_LABEL = "purely infinite (Kirchberg)"
STABLY_FINITE_LABEL = "stably finite (quasidiagonal)"
UNDETERMINED_LABEL = "undetermined"

ORIENTATION_NOTE = "edges run d(e) -> r(e); the edges received at v are r^-1(v); a source receives no edge"
NUCLEAR_NOTE = "finite groups are amenable, so the algebra is nuclear; the UCT is taken as known, not checked"
MONOID_NOTE = "the quotient-graph monoid is a heuristic model of the nonzero projection classes"


@dataclass(frozen=True)
class Witness:
    kind: str
    data: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    value: str
    theorem: str
    witness: Witness | None = None
    gap: str = ""
    labels: tuple[str, ...] = ()

    @property
    def decided(self) -> bool:
        return self.value != UNKNOWN


def _unknown(rule: str, gap: str) -> Verdict:
    return Verdict(UNKNOWN, rule, None, gap)


@dataclass(frozen=True)
class InfiniteVertex:
    vertex: str
    infinite: bool
    source: str | None = None              # lies on a G-circuit with an entry
    path: Path | None = None               # range ``vertex``, domain ``source``
    circuit: GCircuitWitness | None = None
    g_only: bool = False                   # no ordinary circuit with an entry feeds ``vertex``


@dataclass
class ClassificationReport:
    name: str
    summary: dict[str, Any]
    notes: list[str]
    banner: str | None
    pseudo_free: Verdict
    effectivity: Verdict
    minimal: Verdict
    simple: Verdict
    purely_infinite: Verdict
    stably_finite: Verdict
    dichotomy: str
    trace: TraceResult
    monoid: GroupTestVerdict
    monoid_quotient: GroupTestVerdict
    quotient: QuotientGraph
    quotient_circuits: list[Circuit]
    g_circuit: GCircuitWitness | None
    infinite_vertices: list[InfiniteVertex]
    corroboration: list[str] = field(default_factory=list)

    def verdicts(self) -> dict[str, Verdict]:
        return {
            "pseudo_free": self.pseudo_free,
            "effectivity": self.effectivity,
            "minimal": self.minimal,
            "simple": self.simple,
            "purely_infinite": self.purely_infinite,
            "stably_finite": self.stably_finite,
        }


# ---------------------------------------------------------------------------
# vertex infiniteness
# ---------------------------------------------------------------------------


def infinite_vertices(ssg: SelfSimilarGraph) -> list[InfiniteVertex]:
    """Vertices that receive a G-path from a vertex on a G-circuit with an entry."""
    graph = ssg.graph
    circuits = {w: c for w in graph.vertices if (c := g_circuit_with_entry_at(ssg, w)) is not None}
    plain = {y for y in circuit_vertices(graph) if graph.in_degree(y) >= 2}
    targets = set(circuits)
    out: list[InfiniteVertex] = []
    for v in graph.vertices:
        path = path_into(graph, v, targets)
        if path is None:
            out.append(InfiniteVertex(v, False))
            continue
        w = graph.path_domain(path)
        ordinary = bool(reachable_from(graph, v) & plain)
        out.append(InfiniteVertex(v, True, w, path, circuits[w], g_only=not ordinary))
    return out


# ---------------------------------------------------------------------------
# individual verdicts
# ---------------------------------------------------------------------------


def _pseudo_free(ssg: SelfSimilarGraph) -> Verdict:
    rule = "pseudo-freeness"
    res = is_pseudo_free(ssg)
    if res.holds:
        return Verdict(YES, rule, Witness("exhaustive_scan", {"claim": "pseudo_free", "pairs_checked": res.pairs_checked}))
    assert res.witness is not None
    g, e = res.witness
    return Verdict(NO, rule, Witness("fixed_pair", {"g": g, "edge": e}))


def _effectivity(ssg: SelfSimilarGraph, cyl: CylinderResult) -> Verdict:
    rule = "effectivity: every G-circuit has an entry and every g != 1 moves every cylinder"
    bad = find_g_circuit_without_entry(ssg)
    if bad is not None:
        return Verdict(NO, rule, Witness("g_circuit_without_entry", {"path": bad.path, "twist": bad.twist}))
    if not cyl.holds:
        assert cyl.witness is not None
        g, v = cyl.witness
        return Verdict(NO, rule, Witness("cylinder_fixed", {"g": g, "vertex": v}))
    parts = (
        Witness("exhaustive_scan", {"claim": "g_circuit_entries"}),
        Witness("exhaustive_scan", {"claim": "cylinders_moved"}),
    )
    return Verdict(YES, rule, Witness("conjunction", {"parts": parts}))


def _minimal(ssg: SelfSimilarGraph) -> Verdict:
    rule = "minimality: weak G-transitivity"
    res = is_weakly_g_transitive(ssg)
    if res.holds:
        reach = {}
        for v in ssg.graph.vertices:
            acc: set[str] = set()
            for gv in ssg.vertex_orbit(v):
                acc |= reachable_from(ssg.graph, gv)
            reach[v] = tuple(sorted(acc, key=ssg.graph.vertex_index.__getitem__))
        return Verdict(YES, rule, Witness("reach_map", {"reach": reach}))
    return Verdict(
        NO, rule,
        Witness("avoiding_cycle", {"graph": "E", "orbit": True, "vertex": res.vertex, "cycle": res.cycle}),
    )


def _simple(pf: Verdict, eff: Verdict, minimal: Verdict, q: QuotientGraph, cyl: CylinderResult) -> Verdict:
    if pf.value != YES:
        return _unknown("simplicity", "pseudo-freeness fails")
    if eff.value == YES and minimal.value == YES:
        parts = (pf.witness, eff.witness, minimal.witness)
        return Verdict(YES, "simplicity: pseudo-free, effective and minimal", Witness("conjunction", {"parts": parts}))
    q_simple = graph_algebra_simple(q.graph)
    rule = "simplicity: the quotient graph algebra must be simple"
    if not q_simple.holds:
        if q_simple.circuit is not None:
            return Verdict(NO, rule, Witness("circuit_without_entry", {"graph": "quotient", "path": q_simple.circuit}))
        return Verdict(
            NO, rule,
            Witness("avoiding_cycle", {"graph": "quotient", "orbit": False, "vertex": q_simple.vertex, "cycle": q_simple.cycle}),
        )
    gap = "slackness undefined" if not cyl.holds else "no simplicity rule applies"
    return _unknown("simplicity", gap)


def _simple_branch(g_circuit: GCircuitWitness | None) -> tuple[Verdict, Verdict]:
    pi_rule = "dichotomy: a simple algebra with a G-circuit is purely infinite"
    sf_rule = "dichotomy: a simple algebra without G-circuits is stably finite"
    if g_circuit is not None:
        w = Witness("g_circuit", {"path": g_circuit.path, "twist": g_circuit.twist})
        return (
            Verdict(YES, pi_rule, w, labels=("Kirchberg",)),
            Verdict(NO, sf_rule, w),
        )
    w = Witness("acyclic_quotient", {})
    return (
        Verdict(NO, pi_rule, w),
        Verdict(YES, sf_rule, w, labels=("quasidiagonal",)),
    )


def _non_simple_branch(
    ssg: SelfSimilarGraph, q: QuotientGraph, eff: Verdict, cyl: CylinderResult, vertices: list[InfiniteVertex]
) -> tuple[Verdict, Verdict]:
    sf = _unknown("stable finiteness", "stable finiteness is only decided for simple algebras")
    if eff.value == YES and all(iv.infinite for iv in vertices):
        cover = {iv.vertex: (iv.path, iv.source, iv.circuit) for iv in vertices}
        parts = (eff.witness, Witness("g_path_cover", {"cover": cover}))
        return (
            Verdict(
                YES, "pure infiniteness: effective, every vertex receives a G-path from a G-circuit with an entry",
                Witness("conjunction", {"parts": parts}),
            ),
            sf,
        )
    if graph_algebra_pi_sufficient(ssg.graph).holds:
        return (
            Verdict(
                YES, "pure infiniteness: the graph algebra of E is purely infinite",
                Witness("criterion", {"graph": "E", "name": "pi_sufficient"}),
            ),
            sf,
        )
    if cyl.holds and graph_algebra_pi_sufficient(q.graph).holds:
        parts = (
            Witness("criterion", {"graph": "quotient", "name": "pi_sufficient"}),
            Witness("exhaustive_scan", {"claim": "cylinders_moved"}),
        )
        return (
            Verdict(
                YES, "pure infiniteness: the quotient graph algebra is purely infinite and cylinders are moved",
                Witness("conjunction", {"parts": parts}),
            ),
            sf,
        )
    return _unknown("pure infiniteness", "no sufficient condition holds outside the simple case"), sf


# ---------------------------------------------------------------------------
# the report
# ---------------------------------------------------------------------------


def consistency_problems(report: ClassificationReport) -> list[str]:
    """Rules every emitted report must satisfy; an empty list means consistent."""
    out: list[str] = []
    pi, sf = report.purely_infinite.value, report.stably_finite.value
    if report.simple.value == YES:
        if {pi, sf} != {YES, NO}:
            out.append(f"simple but purely_infinite={pi}, stably_finite={sf}")
        if pi == YES and report.trace.feasible:
            out.append("purely infinite simple algebra with a G-trace")
        if sf == YES and not report.trace.feasible:
            out.append("stably finite simple algebra without a G-trace")
        mq = report.monoid_quotient.verdict
        if mq == GROUP and pi != YES:
            out.append("quotient monoid is a group but the algebra is not purely infinite")
        if mq == NOT_GROUP and pi != NO:
            out.append("quotient monoid is not a group but the algebra is purely infinite")
    if report.summary.get("source_free") and sf == YES:
        out.append("stably finite verdict on a finite source-free graph")
    if report.simple.value != YES and sf != UNKNOWN:
        out.append("stable finiteness decided outside the simple case")
    if report.simple.value != YES and pi == NO:
        out.append("pure infiniteness refuted outside the simple case")
    return out


def _corroborate(report: ClassificationReport) -> list[str]:
    out: list[str] = []
    for label, mv in (("E", report.monoid), ("quotient", report.monoid_quotient)):
        if mv.verdict == GROUP:
            out.append(f"monoid of {label}: nonzero elements form a group")
        elif mv.verdict == NOT_GROUP:
            out.append(f"monoid of {label}: not a group (trace certificate)")
        else:
            out.append(f"monoid of {label}: undecided ({mv.gap})")
    if report.trace.feasible:
        out.append("a G-trace exists")
    else:
        out.append("no G-trace exists (Farkas certificate)")
    g_only = [iv.vertex for iv in report.infinite_vertices if iv.infinite and iv.g_only]
    if g_only:
        out.append("infinite only through G-circuits: " + ", ".join(g_only))
    return out


def classify(ssg: SelfSimilarGraph, config: AnalysisConfig | None = None, log: LogFn = None) -> ClassificationReport:
    cfg = config or AnalysisConfig()

    def say(msg: str) -> None:
        if log:
            log(msg)

    graph = ssg.graph
    label = ssg.name or "input"
    say(f"{label}: {len(graph.vertices)} vertices, {len(graph.edges)} edges, |G| = {ssg.group.order}")

    q = build_quotient(ssg)
    q_circuits = find_circuits(q.graph, cfg.circuit_cap)
    g_circuit = find_g_circuit(ssg)
    vertices = infinite_vertices(ssg)
    say(f"{label}: quotient has {len(q.graph.vertices)} classes and {len(q_circuits)} elementary circuits")

    pf = _pseudo_free(ssg)
    banner: str | None = None
    if not graph.source_free:
        banner = "SourcePresent: unreceiving vertices " + ", ".join(graph.sources)
        logger.warning("%s: %s; theorem-backed verdicts degrade to Unknown", label, banner)
        gap = "graph has sources"
        eff = _unknown("effectivity", gap)
        minimal = _unknown("minimality", gap)
        simple = _unknown("simplicity", gap)
        pi = _unknown("pure infiniteness", gap)
        sf = _unknown("stable finiteness", gap)
    else:
        cyl = cylinder_condition_holds(ssg)
        eff = _effectivity(ssg, cyl)
        minimal = _minimal(ssg)
        simple = _simple(pf, eff, minimal, q, cyl)
        say(f"{label}: pseudo_free={pf.value} effectivity={eff.value} minimal={minimal.value} simple={simple.value}")
        if simple.value == YES:
            pi, sf = _simple_branch(g_circuit)
        elif pf.value != YES:
            pi = _unknown("pure infiniteness", "pseudo-freeness fails")
            sf = _unknown("stable finiteness", "pseudo-freeness fails")
        else:
            pi, sf = _non_simple_branch(ssg, q, eff, cyl, vertices)

    if simple.value == YES:
        dichotomy = PURELY_INFINITE_LABEL if pi.value == YES else STABLY_FINITE_LABEL
    else:
        dichotomy = UNDETERMINED_LABEL

    trace = solve_graph_g_trace(ssg)
    say(f"{label}: G-trace {'found' if trace.feasible else 'infeasible'}")
    bounds = (cfg.monoid_identity_bound, cfg.monoid_bound, cfg.monoid_state_cap)
    monoid = is_group_nonzero(monoid_of(graph), *bounds)
    mq = is_group_nonzero(monoid_of(q.graph), *bounds)
    monoid_q = replace(mq, heuristic=True)
    say(f"{label}: monoid E={monoid.verdict} quotient={monoid_q.verdict}")

    for name, v in (("simple", simple), ("purely_infinite", pi), ("stably_finite", sf)):
        if v.value == UNKNOWN:
            logger.info("%s: %s is Unknown (%s)", label, name, v.gap)

    summary = {
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "group_order": ssg.group.order,
        "source_free": graph.source_free,
        "sources": list(graph.sources),
        "orbits": [list(o) for o in ssg.vertex_orbits],
    }
    notes = [ORIENTATION_NOTE, trace.note, MONOID_NOTE, NUCLEAR_NOTE]
    report = ClassificationReport(
        label, summary, notes, banner, pf, eff, minimal, simple, pi, sf, dichotomy,
        trace, monoid, monoid_q, q, q_circuits, g_circuit, vertices,
    )
    report.corroboration = _corroborate(report)
    for problem in consistency_problems(report):
        logger.warning("%s: inconsistent report: %s", label, problem)
    return report
