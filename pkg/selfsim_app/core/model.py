"""Finite self-similar graphs: graph, group, action, cocycle.

Orientation convention used everywhere in the package: an edge ``e`` points
from its domain ``d(e)`` to its range ``r(e)``, the in-edges of a vertex ``v``
are ``r^-1(v)`` and a source is a vertex that receives no edge. A path
``e1 e2 ... en`` is composable when ``d(e_i) = r(e_{i+1})``; its range is
``r(e1)`` and its domain is ``d(en)``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)


class SourcePresentError(RuntimeError):
    """Raised when an analysis needs a source-free graph and got one with sources."""

    def __init__(self, sources: Sequence[str]) -> None:
        self.sources = tuple(sources)
        super().__init__(f"graph has sources (vertices receiving no edge): {', '.join(self.sources)}")


class UnknownVertexError(KeyError):
    """Raised when a vertex id is not declared in the graph."""


class InvalidPathError(ValueError):
    """Raised when an edge sequence is not a composable path."""


@dataclass(frozen=True)
class AxiomViolation:
    kind: str
    detail: str
    items: tuple[str, ...] = ()

    def __str__(self) -> str:
        where = f" ({', '.join(self.items)})" if self.items else ""
        return f"{self.kind}{where}: {self.detail}"


class ValidationError(ValueError):
    """Raised when a description violates the self-similar graph axioms."""

    def __init__(self, violations: Sequence[AxiomViolation]) -> None:
        self.violations = list(violations)
        head = self.violations[0] if self.violations else "no detail"
        more = f" (+{len(self.violations) - 1} more)" if len(self.violations) > 1 else ""
        super().__init__(f"{head}{more}")


# ---------------------------------------------------------------------------
# graphs and paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Edge:
    id: str
    d: str
    r: str


@dataclass(frozen=True)
class Path:
    """Finite path; an empty path is anchored at a vertex."""

    edges: tuple[str, ...] = ()
    anchor: str | None = None

    @classmethod
    def empty(cls, vertex: str) -> "Path":
        return cls((), vertex)

    @classmethod
    def of(cls, *edges: str) -> "Path":
        return cls(tuple(edges), None)

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else f"<{self.anchor}>"


def check_graph(vertices: Sequence[str], edges: Sequence[Edge]) -> list[AxiomViolation]:
    out: list[AxiomViolation] = []
    seen: set[str] = set()
    for v in vertices:
        if v in seen:
            out.append(AxiomViolation("DuplicateId", f"vertex {v!r} declared twice", (v,)))
        seen.add(v)
    seen_e: set[str] = set()
    for e in edges:
        if e.id in seen_e:
            out.append(AxiomViolation("DuplicateId", f"edge {e.id!r} declared twice", (e.id,)))
        seen_e.add(e.id)
        for end, name in ((e.d, "d"), (e.r, "r")):
            if end not in seen:
                out.append(AxiomViolation("DanglingEdge", f"{name}({e.id}) = {end!r} is not a vertex", (e.id, end)))
    return out


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        problems = check_graph(self.vertices, self.edges)
        if problems:
            raise ValidationError(problems)

    @classmethod
    def from_triples(cls, vertices: Iterable[str], triples: Iterable[tuple[str, str, str]]) -> "Graph":
        """Build from ``(id, d, r)`` triples."""
        return cls(tuple(vertices), tuple(Edge(i, d, r) for i, d, r in triples))

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _by_id(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _in_edges(self) -> dict[str, tuple[str, ...]]:
        acc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            acc[e.r].append(e.id)
        return {v: tuple(ids) for v, ids in acc.items()}

    @cached_property
    def _out_edges(self) -> dict[str, tuple[str, ...]]:
        acc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            acc[e.d].append(e.id)
        return {v: tuple(ids) for v, ids in acc.items()}

    @cached_property
    def in_degrees(self) -> np.ndarray:
        r_idx = np.fromiter((self.vertex_index[e.r] for e in self.edges), dtype=np.int64, count=len(self.edges))
        return np.bincount(r_idx, minlength=len(self.vertices))

    def has_vertex(self, v: str) -> bool:
        return v in self.vertex_index

    def edge(self, e: str) -> Edge:
        try:
            return self._by_id[e]
        except KeyError:
            raise InvalidPathError(f"unknown edge {e!r}") from None

    def r(self, e: str) -> str:
        return self.edge(e).r

    def d(self, e: str) -> str:
        return self.edge(e).d

    def in_edges(self, v: str) -> tuple[str, ...]:
        """Edges received at ``v``: ``{e : r(e) = v}``."""
        try:
            return self._in_edges[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def out_edges(self, v: str) -> tuple[str, ...]:
        """Edges leaving ``v``: ``{e : d(e) = v}``."""
        try:
            return self._out_edges[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def in_degree(self, v: str) -> int:
        return len(self.in_edges(v))

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    @cached_property
    def sources(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if not self._in_edges[v])

    @property
    def source_free(self) -> bool:
        return not self.sources

    def require_source_free(self) -> None:
        if self.sources:
            raise SourcePresentError(self.sources)

    # paths

    def check_path(self, path: Path) -> None:
        if not path.edges:
            if path.anchor is None or not self.has_vertex(path.anchor):
                raise InvalidPathError(f"empty path must be anchored at a vertex, got {path.anchor!r}")
            return
        for e in path.edges:
            self.edge(e)
        for a, b in zip(path.edges, path.edges[1:]):
            if self.d(a) != self.r(b):
                raise InvalidPathError(f"d({a}) = {self.d(a)} but r({b}) = {self.r(b)}")

    def is_path(self, path: Path) -> bool:
        try:
            self.check_path(path)
        except InvalidPathError:
            return False
        return True

    def path_range(self, path: Path) -> str:
        return self.r(path.edges[0]) if path.edges else str(path.anchor)

    def path_domain(self, path: Path) -> str:
        return self.d(path.edges[-1]) if path.edges else str(path.anchor)

    def vertex_trace(self, path: Path) -> tuple[str, ...]:
        """``r(e1), d(e1), d(e2), ..., d(en)``."""
        if not path.edges:
            return (str(path.anchor),)
        return (self.r(path.edges[0]),) + tuple(self.d(e) for e in path.edges)

    def paths_from(self, v: str, length: int) -> list[Path]:
        """All paths of exactly ``length`` edges with range ``v``."""
        frontier = [Path.empty(v)]
        for _ in range(length):
            nxt: list[Path] = []
            for p in frontier:
                tail = self.path_domain(p)
                nxt.extend(Path(p.edges + (e,)) for e in self.in_edges(tail))
            frontier = nxt
        return frontier

    def all_paths(self, max_length: int) -> list[Path]:
        out: list[Path] = []
        for v in self.vertices:
            for n in range(max_length + 1):
                out.extend(self.paths_from(v, n))
        return out

    @cached_property
    def nx_graph(self) -> nx.MultiDiGraph:
        """Shared read-only networkx view."""
        return self.to_networkx()

    def to_networkx(self) -> nx.MultiDiGraph:
        """Arcs run ``r(e) -> d(e)``, so graph paths read left to right."""
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.r, e.d, key=e.id)
        return g


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FinGroup:
    """Finite group given by its full multiplication table (``table[g, h] = gh``)."""

    elements: tuple[str, ...]
    identity: str
    table: np.ndarray

    @cached_property
    def index(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity_index(self) -> int:
        return self.index[self.identity]

    @cached_property
    def inverse(self) -> np.ndarray:
        one = self.identity_index
        inv = np.full(len(self.elements), -1, dtype=np.int64)
        rows, cols = np.nonzero(self.table == one)
        inv[rows] = cols
        return inv

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, g: str, h: str) -> str:
        return self.elements[int(self.table[self.index[g], self.index[h]])]

    def inv(self, g: str) -> str:
        return self.elements[int(self.inverse[self.index[g]])]

    def product(self, items: Iterable[str]) -> str:
        acc = self.identity
        for g in items:
            acc = self.mul(acc, g)
        return acc

    def search_order(self) -> tuple[str, ...]:
        """Identity first, then declaration order; fixes every 'pick some g' choice."""
        return (self.identity,) + tuple(g for g in self.elements if g != self.identity)

    @classmethod
    def cyclic(cls, n: int) -> "FinGroup":
        names = tuple(str(k) for k in range(n))
        idx = np.arange(n, dtype=np.int64)
        return cls(names, "0", (idx[:, None] + idx[None, :]) % n)

    @classmethod
    def trivial(cls) -> "FinGroup":
        return cls.cyclic(1)


def check_group(group: FinGroup) -> list[AxiomViolation]:
    T = group.table
    names = group.elements
    out: list[AxiomViolation] = []
    # T[T, :][a, b, c] = (ab)c ; T[:, T][a, b, c] = a(bc)
    lhs = T[T, :]
    rhs = T[:, T]
    for a, b, c in np.argwhere(lhs != rhs):
        out.append(
            AxiomViolation("NotAGroup", "associativity fails", (names[a], names[b], names[c]))
        )
    one = group.identity_index
    n = len(names)
    for g in range(n):
        if T[one, g] != g or T[g, one] != g:
            out.append(AxiomViolation("NotAGroup", f"{group.identity} is not an identity for {names[g]}", (names[g],)))
        left = set(np.nonzero(T[g, :] == one)[0].tolist())
        right = set(np.nonzero(T[:, g] == one)[0].tolist())
        if not left & right:
            out.append(AxiomViolation("NotAGroup", f"{names[g]} has no two-sided inverse", (names[g],)))
    return out


# ---------------------------------------------------------------------------
# action and cocycle
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GraphAction:
    """``vertex_perm[g, v]`` and ``edge_perm[g, e]`` as index tables."""

    vertex_perm: np.ndarray
    edge_perm: np.ndarray


@dataclass(frozen=True, eq=False)
class Cocycle:
    """``table[g, e]`` = index of ``phi(g, e)``."""

    table: np.ndarray


def check_action(graph: Graph, group: FinGroup, action: GraphAction) -> list[AxiomViolation]:
    G = group.elements
    V = graph.vertices
    E = [e.id for e in graph.edges]
    VP, EP, T = action.vertex_perm, action.edge_perm, group.table
    out: list[AxiomViolation] = []
    for gi, g in enumerate(G):
        if len(set(VP[gi].tolist())) != len(V):
            out.append(AxiomViolation("NotAnAction", f"{g} does not permute the vertices", (g,)))
        if len(set(EP[gi].tolist())) != len(E):
            out.append(AxiomViolation("NotAnAction", f"{g} does not permute the edges", (g,)))
    one = group.identity_index
    if not np.array_equal(VP[one], np.arange(len(V))) or not np.array_equal(EP[one], np.arange(len(E))):
        out.append(AxiomViolation("NotAnAction", "the identity does not act trivially", (group.identity,)))
    # perm(gh) = perm(g) o perm(h)
    for table, kind, names in ((VP, "vertex", V), (EP, "edge", E)):
        composed = table[:, table]  # composed[g, h, x] = g.(h.x)
        direct = table[T]           # direct[g, h, x] = (gh).x
        for gi, hi, xi in np.argwhere(composed != direct):
            out.append(
                AxiomViolation(
                    "NotAnAction",
                    f"({G[gi]}{G[hi]}).{names[xi]} != {G[gi]}.({G[hi]}.{names[xi]})",
                    (G[gi], G[hi], names[xi]),
                )
            )
    r_idx = np.array([graph.vertex_index[e.r] for e in graph.edges], dtype=np.int64)
    d_idx = np.array([graph.vertex_index[e.d] for e in graph.edges], dtype=np.int64)
    if len(E):
        r_bad = VP[:, r_idx] != r_idx[EP]
        d_bad = VP[:, d_idx] != d_idx[EP]
        for gi, ei in np.argwhere(r_bad | d_bad):
            out.append(
                AxiomViolation("NotAnAction", f"{G[gi]} does not commute with r/d on {E[ei]}", (G[gi], E[ei]))
            )
    return out


def check_cocycle(graph: Graph, group: FinGroup, action: GraphAction, cocycle: Cocycle) -> list[AxiomViolation]:
    G = group.elements
    V = graph.vertices
    E = [e.id for e in graph.edges]
    T, EP, VP, PHI = group.table, action.edge_perm, action.vertex_perm, cocycle.table
    out: list[AxiomViolation] = []
    if not E:
        return out
    n = len(G)
    # phi(gh, e) == phi(g, h.e) . phi(h, e)
    lhs = PHI[T]                                  # [g, h, e]
    moved = EP                                    # [h, e] -> h.e
    phi_g_he = PHI[np.arange(n)[:, None, None], moved[None, :, :]]  # [g, h, e]
    rhs = T[phi_g_he, PHI[None, :, :]]
    for gi, hi, ei in np.argwhere(lhs != rhs):
        out.append(
            AxiomViolation(
                "CocycleLawViolated",
                f"phi({G[gi]}{G[hi]}, {E[ei]}) != phi({G[gi]}, {G[hi]}.{E[ei]}) phi({G[hi]}, {E[ei]})",
                (G[gi], G[hi], E[ei]),
            )
        )
    # phi(g, e).v == g.v
    via_phi = VP[PHI]                             # [g, e, v]
    direct = VP[:, None, :]
    for gi, ei, vi in np.argwhere(via_phi != direct):
        out.append(
            AxiomViolation(
                "VertexCompatViolated",
                f"phi({G[gi]}, {E[ei]}).{V[vi]} != {G[gi]}.{V[vi]}",
                (G[gi], E[ei], V[vi]),
            )
        )
    return out


# ---------------------------------------------------------------------------
# the self-similar graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SelfSimilarGraph:
    graph: Graph
    group: FinGroup
    action: GraphAction
    cocycle: Cocycle
    name: str = field(default="", compare=False)

    @property
    def source_free(self) -> bool:
        return self.graph.source_free

    @cached_property
    def pseudo_free(self) -> bool:
        from .orbit_transducer import is_pseudo_free

        return is_pseudo_free(self).holds

    # element-level lookups

    def act_vertex(self, g: str, v: str) -> str:
        gi = self.group.index[g]
        try:
            vi = self.graph.vertex_index[v]
        except KeyError:
            raise UnknownVertexError(v) from None
        return self.graph.vertices[int(self.action.vertex_perm[gi, vi])]

    def act_edge(self, g: str, e: str) -> str:
        ei = self.graph.edge_index[e]
        return self.graph.edges[int(self.action.edge_perm[self.group.index[g], ei])].id

    def restrict(self, g: str, e: str) -> str:
        """``phi(g, e)``."""
        ei = self.graph.edge_index[e]
        return self.group.elements[int(self.cocycle.table[self.group.index[g], ei])]

    # orbits

    @cached_property
    def vertex_orbits(self) -> tuple[tuple[str, ...], ...]:
        """Vertex orbits, each in declaration order, listed by first member."""
        VP = self.action.vertex_perm
        seen: set[int] = set()
        orbits: list[tuple[str, ...]] = []
        for vi in range(len(self.graph.vertices)):
            if vi in seen:
                continue
            members = sorted(set(VP[:, vi].tolist()))
            seen.update(members)
            orbits.append(tuple(self.graph.vertices[m] for m in members))
        return tuple(orbits)

    @cached_property
    def _vertex_orbit_of(self) -> dict[str, tuple[str, ...]]:
        return {v: orbit for orbit in self.vertex_orbits for v in orbit}

    def vertex_orbit(self, v: str) -> tuple[str, ...]:
        try:
            return self._vertex_orbit_of[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def edge_orbit(self, e: str) -> tuple[str, ...]:
        ei = self.graph.edge_index[e]
        members = sorted(set(self.action.edge_perm[:, ei].tolist()))
        return tuple(self.graph.edges[m].id for m in members)

    def transporter(self, src: str, dst: str) -> str | None:
        """First ``g`` (identity first) with ``g.src = dst``."""
        for g in self.group.search_order():
            if self.act_vertex(g, src) == dst:
                return g
        return None

    def stabilizer(self, v: str) -> tuple[str, ...]:
        return tuple(g for g in self.group.elements if self.act_vertex(g, v) == v)


# ---------------------------------------------------------------------------
# validation from a raw description
# ---------------------------------------------------------------------------


def _lookup_table(
    raw: Mapping, rows: Sequence[str], cols: Sequence[str], values: Mapping[str, int], what: str,
    problems: list[AxiomViolation],
) -> np.ndarray:
    out = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, a in enumerate(rows):
        row = raw.get(a) if isinstance(raw, Mapping) else None
        if not isinstance(row, Mapping):
            problems.append(AxiomViolation("MissingEntry", f"{what}: no row for {a!r}", (a,)))
            continue
        for j, b in enumerate(cols):
            val = row.get(b)
            if val not in values:
                problems.append(
                    AxiomViolation("MissingEntry", f"{what}[{a}][{b}] = {val!r} is missing or undeclared", (a, b))
                )
                continue
            out[i, j] = values[val]
    return out


def validate(raw: Mapping) -> SelfSimilarGraph:
    """Validate a raw description and build the self-similar graph.

    Structural problems (undeclared ids, incomplete tables) are reported
    first, since the axioms cannot be evaluated on partial tables. When the
    structure is sound, every axiom is checked exhaustively and every
    violation is reported.
    """
    problems: list[AxiomViolation] = []
    vertices = [str(v) for v in raw.get("vertices", [])]
    edges = [Edge(str(e["id"]), str(e["d"]), str(e["r"])) for e in raw.get("edges", [])]
    problems.extend(check_graph(vertices, edges))
    if not vertices:
        problems.append(AxiomViolation("EmptyGraph", "the graph has no vertices"))

    g_raw = raw.get("group", {})
    elements = [str(g) for g in g_raw.get("elements", [])]
    identity = str(g_raw.get("identity", ""))
    if len(set(elements)) != len(elements):
        problems.append(AxiomViolation("DuplicateId", "group elements repeat", tuple(elements)))
    if not elements:
        problems.append(AxiomViolation("NotAGroup", "group has no elements"))
    if identity not in elements:
        problems.append(AxiomViolation("NotAGroup", f"identity {identity!r} is not an element", (identity,)))
    if problems:
        raise ValidationError(problems)

    g_index = {g: i for i, g in enumerate(elements)}
    v_index = {v: i for i, v in enumerate(vertices)}
    e_index = {e.id: i for i, e in enumerate(edges)}
    e_ids = [e.id for e in edges]

    table = _lookup_table(g_raw.get("table", {}), elements, elements, g_index, "group.table", problems)
    act_raw = raw.get("action", {})
    vperm = _lookup_table(act_raw.get("vertices", {}), elements, vertices, v_index, "action.vertices", problems)
    eperm = _lookup_table(act_raw.get("edges", {}), elements, e_ids, e_index, "action.edges", problems)
    phi = _lookup_table(raw.get("cocycle", {}), elements, e_ids, g_index, "cocycle", problems)
    if problems:
        raise ValidationError(problems)

    graph = Graph(tuple(vertices), tuple(edges))
    group = FinGroup(tuple(elements), identity, table)
    action = GraphAction(vperm, eperm)
    cocycle = Cocycle(phi)

    group_problems = check_group(group)
    problems.extend(group_problems)
    if not group_problems:
        action_problems = check_action(graph, group, action)
        problems.extend(action_problems)
        if not action_problems:
            problems.extend(check_cocycle(graph, group, action, cocycle))
    if problems:
        logger.info("validation rejected description with %d violation(s)", len(problems))
        raise ValidationError(problems)
    return SelfSimilarGraph(graph, group, action, cocycle, name=str(raw.get("name", "")))


def build(
    graph: Graph,
    group: FinGroup,
    vertex_action: Mapping[str, Mapping[str, str]] | None = None,
    edge_action: Mapping[str, Mapping[str, str]] | None = None,
    cocycle: Mapping[str, Mapping[str, str]] | None = None,
    name: str = "",
) -> SelfSimilarGraph:
    """Validated construction from in-memory maps.

    Missing action maps default to the trivial action; a missing cocycle
    defaults to ``phi(g, e) = g``.
    """
    G = group.elements
    V = graph.vertices
    E = [e.id for e in graph.edges]
    raw = {
        "name": name,
        "vertices": list(V),
        "edges": [{"id": e.id, "d": e.d, "r": e.r} for e in graph.edges],
        "group": {
            "elements": list(G),
            "identity": group.identity,
            "table": {g: {h: group.mul(g, h) for h in G} for g in G},
        },
        "action": {
            "vertices": vertex_action or {g: {v: v for v in V} for g in G},
            "edges": edge_action or {g: {e: e for e in E} for g in G},
        },
        "cocycle": cocycle or {g: {e: g for e in E} for g in G},
    }
    return validate(raw)


def to_raw(ssg: SelfSimilarGraph) -> dict:
    """Inverse of :func:`validate`: the raw description of a validated graph."""
    G = ssg.group.elements
    V = ssg.graph.vertices
    E = [e.id for e in ssg.graph.edges]
    return {
        "vertices": list(V),
        "edges": [{"id": e.id, "d": e.d, "r": e.r} for e in ssg.graph.edges],
        "group": {
            "elements": list(G),
            "identity": ssg.group.identity,
            "table": {g: {h: ssg.group.mul(g, h) for h in G} for g in G},
        },
        "action": {
            "vertices": {g: {v: ssg.act_vertex(g, v) for v in V} for g in G},
            "edges": {g: {e: ssg.act_edge(g, e) for e in E} for g in G},
        },
        "cocycle": {g: {e: ssg.restrict(g, e) for e in E} for g in G},
    }


def trivialize(ssg: SelfSimilarGraph) -> SelfSimilarGraph:
    """Same graph and group with the trivial action and the trivial cocycle."""
    G = ssg.group.elements
    E = [e.id for e in ssg.graph.edges]
    return build(
        ssg.graph,
        ssg.group,
        cocycle={g: {e: ssg.group.identity for e in E} for g in G},
        name=f"{ssg.name}/trivialized" if ssg.name else "",
    )


# ---------------------------------------------------------------------------
# action on finite paths
# ---------------------------------------------------------------------------


def extend_action(ssg: SelfSimilarGraph, g: str, path: Path) -> tuple[Path, str]:
    """``(g.path, phi(g, path))`` via ``g(a1 a2) = (g a1)(phi(g, a1) a2)``."""
    ssg.graph.check_path(path)
    return _extend(ssg, g, path)


def _extend(ssg: SelfSimilarGraph, g: str, path: Path) -> tuple[Path, str]:
    n = len(path.edges)
    if n == 0:
        return Path.empty(ssg.act_vertex(g, str(path.anchor))), g
    if n == 1:
        e = path.edges[0]
        return Path.of(ssg.act_edge(g, e)), ssg.restrict(g, e)
    head, tail = Path(path.edges[: n // 2]), Path(path.edges[n // 2 :])
    moved_head, h = _extend(ssg, g, head)
    moved_tail, k = _extend(ssg, h, tail)
    return Path(moved_head.edges + moved_tail.edges), k


def path_orbit(ssg: SelfSimilarGraph, path: Path) -> tuple[Path, ...]:
    ssg.graph.check_path(path)
    seen: dict[Path, None] = {}
    for g in ssg.group.elements:
        seen.setdefault(_extend(ssg, g, path)[0], None)
    return tuple(seen)


def paths_equivalent(ssg: SelfSimilarGraph, alpha: Path, beta: Path) -> bool:
    """``alpha ~ beta`` iff ``beta = g.alpha`` for some ``g``."""
    if len(alpha) != len(beta):
        return False
    return beta in path_orbit(ssg, alpha)
