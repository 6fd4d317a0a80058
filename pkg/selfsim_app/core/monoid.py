"""The graph monoid and a bounded test for "the nonzero elements form a group".

Generators are the vertices. Each vertex ``v`` that receives an edge gives the
relation ``a_v = sum a_{d(e)}`` over the edges ``e`` received at ``v``.
Equality is searched by rewriting one relation at a time in either direction,
never leaving total degree ``<= bound``; a found rewrite chain is a proof, an
exhausted search only means Unknown.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field

from .model import Graph
from .trace_lp import TraceResult, solve_graph_trace

logger = logging.getLogger(__name__)

YES = "Yes"
UNKNOWN = "Unknown"
GROUP = "Group"
NOT_GROUP = "NotGroup"

DEFAULT_IDENTITY_BOUND = 6
DEFAULT_BOUND = 24
DEFAULT_STATE_CAP = 200_000


class BoundTooSmallError(ValueError):
    """Raised when a search bound cannot hold the elements it is asked about."""


@dataclass(frozen=True)
class MonoidElement:
    counts: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> "MonoidElement":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "MonoidElement":
        return cls(tuple(1 if k == i else 0 for k in range(n)))

    @property
    def degree(self) -> int:
        return sum(self.counts)

    @property
    def is_zero(self) -> bool:
        return not any(self.counts)

    def __add__(self, other: "MonoidElement") -> "MonoidElement":
        return MonoidElement(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "MonoidElement") -> "MonoidElement":
        diff = tuple(a - b for a, b in zip(self.counts, other.counts))
        if any(c < 0 for c in diff):
            raise ValueError("difference leaves the monoid")
        return MonoidElement(diff)

    def dominates(self, other: "MonoidElement") -> bool:
        return all(a >= b for a, b in zip(self.counts, other.counts))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Degree first, then lexicographic."""
        return (self.degree, self.counts)


@dataclass(frozen=True)
class Relation:
    vertex: int
    image: tuple[int, ...]

    @property
    def delta(self) -> tuple[int, ...]:
        """``image - unit(vertex)``."""
        return tuple(c - (1 if k == self.vertex else 0) for k, c in enumerate(self.image))


@dataclass(frozen=True, eq=False)
class MonoidPresentation:
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    graph: Graph

    def unit(self, v: str) -> MonoidElement:
        return MonoidElement.unit(len(self.generators), self.generators.index(v))

    def element(self, counts: Mapping[str, int]) -> MonoidElement:
        return MonoidElement(tuple(int(counts.get(v, 0)) for v in self.generators))

    def format(self, x: MonoidElement) -> str:
        terms = [
            (f"a_{v}" if c == 1 else f"{c} a_{v}")
            for v, c in zip(self.generators, x.counts)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def describe(self) -> list[str]:
        n = len(self.generators)
        return [
            f"{self.format(MonoidElement.unit(n, rel.vertex))} = {self.format(MonoidElement(rel.image))}"
            for rel in self.relations
        ]

    def moves(self, x: MonoidElement, bound: int) -> Iterator[MonoidElement]:
        """One relation rewrite at one position, forward then reverse, in generator order."""
        c = x.counts
        deg = sum(c)
        for rel in self.relations:
            delta = rel.delta
            step = sum(delta)
            if not any(delta):
                continue
            if c[rel.vertex] >= 1 and deg + step <= bound:
                yield MonoidElement(tuple(a + b for a, b in zip(c, delta)))
            if deg - step <= bound and all(a >= b for a, b in zip(c, rel.image)):
                yield MonoidElement(tuple(a - b for a, b in zip(c, delta)))


def monoid_of(graph: Graph) -> MonoidPresentation:
    V = graph.vertices
    idx = graph.vertex_index
    relations: list[Relation] = []
    for v in V:
        received = graph.in_edges(v)
        if not received:
            continue
        image = [0] * len(V)
        for e in received:
            image[idx[graph.d(e)]] += 1
        relations.append(Relation(idx[v], tuple(image)))
    return MonoidPresentation(tuple(V), tuple(relations), graph)


# ---------------------------------------------------------------------------
# bounded congruence search
# ---------------------------------------------------------------------------

Parents = dict[MonoidElement, "MonoidElement | None"]


@dataclass(frozen=True)
class EqualityResult:
    verdict: str
    chain: tuple[MonoidElement, ...] = ()    # consecutive entries differ by one rewrite
    visited: int = 0


def _walk(parent: Parents, x: MonoidElement) -> list[MonoidElement]:
    """``x`` back to the search root."""
    out = [x]
    cur = parent[x]
    while cur is not None:
        out.append(cur)
        cur = parent[cur]
    return out


def _expand(
    p: MonoidPresentation, frontier: list[MonoidElement], own: Parents, other: Parents, bound: int
) -> tuple[list[MonoidElement], MonoidElement | None]:
    nxt: list[MonoidElement] = []
    for x in frontier:
        for y in p.moves(x, bound):
            if y in own:
                continue
            own[y] = x
            if y in other:
                return nxt, y
            nxt.append(y)
    nxt.sort(key=MonoidElement.sort_key)
    return nxt, None


def elements_equal(
    p: MonoidPresentation, x: MonoidElement, y: MonoidElement, bound: int, state_cap: int = DEFAULT_STATE_CAP
) -> EqualityResult:
    if bound < max(x.degree, y.degree):
        raise BoundTooSmallError(f"bound {bound} is below the degree of the inputs")
    if x == y:
        return EqualityResult(YES, (x,), 1)
    left: Parents = {x: None}
    right: Parents = {y: None}
    lf, rf = [x], [y]
    while lf and rf and len(left) + len(right) <= state_cap:
        if len(lf) <= len(rf):
            lf, meet = _expand(p, lf, left, right, bound)
        else:
            rf, meet = _expand(p, rf, right, left, bound)
        if meet is not None:
            chain = list(reversed(_walk(left, meet))) + _walk(right, meet)[1:]
            return EqualityResult(YES, tuple(chain), len(left) + len(right))
    logger.debug("equality search exhausted after %d elements", len(left) + len(right))
    return EqualityResult(UNKNOWN, (), len(left) + len(right))


def bounded_class(
    p: MonoidPresentation,
    start: MonoidElement,
    bound: int,
    state_cap: int = DEFAULT_STATE_CAP,
    enough: Callable[[Parents], bool] | None = None,
) -> tuple[Parents, bool]:
    """Everything reachable from ``start`` within degree ``bound``; the flag is False when cut short."""
    parent: Parents = {start: None}
    level = [start]
    while level:
        if enough is not None and enough(parent):
            return parent, False
        nxt: list[MonoidElement] = []
        for x in level:
            for y in p.moves(x, bound):
                if y in parent:
                    continue
                parent[y] = x
                nxt.append(y)
                if len(parent) >= state_cap:
                    return parent, False
        level = sorted(nxt, key=MonoidElement.sort_key)
    return parent, True


# ---------------------------------------------------------------------------
# group test
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupTestVerdict:
    verdict: str
    identity: MonoidElement | None = None
    inverses: dict[str, MonoidElement] = field(default_factory=dict)
    identity_chains: dict[str, tuple[MonoidElement, ...]] = field(default_factory=dict)   # a_v .. f + a_v
    inverse_chains: dict[str, tuple[MonoidElement, ...]] = field(default_factory=dict)    # f .. a_v + x_v
    trace: TraceResult | None = None
    gap: str = ""
    heuristic: bool = False
    presentation: MonoidPresentation | None = None


def _depths(lo: int, hi: int) -> list[int]:
    out = []
    d = max(lo, 1)
    while d < hi:
        out.append(d)
        d *= 2
    out.append(hi)
    return out


def _find_identity(
    p: MonoidPresentation, identity_bound: int, depth: int, state_cap: int
) -> tuple[MonoidElement, dict[str, tuple[MonoidElement, ...]]] | None:
    classes: dict[str, Parents] = {}
    candidates: set[MonoidElement] | None = None
    for v in p.generators:
        a = p.unit(v)
        parent, _ = bounded_class(p, a, depth, state_cap)
        classes[v] = parent
        here = {
            y - a for y in parent if y != a and y.dominates(a) and y.degree - 1 <= identity_bound
        }
        candidates = here if candidates is None else candidates & here
        if not candidates:
            return None
    assert candidates
    f = min(candidates, key=MonoidElement.sort_key)
    chains = {v: tuple(reversed(_walk(classes[v], f + p.unit(v)))) for v in p.generators}
    return f, chains


def _find_inverses(
    p: MonoidPresentation,
    f: MonoidElement,
    identity_chains: dict[str, tuple[MonoidElement, ...]],
    depth: int,
    state_cap: int,
) -> tuple[dict[str, MonoidElement], dict[str, tuple[MonoidElement, ...]]] | None:
    units = {v: p.unit(v) for v in p.generators}

    def covered(parent: Parents) -> bool:
        return all(any(y.dominates(a) for y in parent) for a in units.values())

    parent, _ = bounded_class(p, f, depth, state_cap, enough=covered)
    ordered = sorted(parent, key=MonoidElement.sort_key)
    inverses: dict[str, MonoidElement] = {}
    chains: dict[str, tuple[MonoidElement, ...]] = {}
    for v, a in units.items():
        y = next((z for z in ordered if z.dominates(a)), None)
        if y is None:
            return None
        x = y - a
        to_y = list(reversed(_walk(parent, y)))       # f .. y
        if x.is_zero:
            # a_v ~ f, so f itself inverts a_v
            x = f
            to_y = to_y + list(identity_chains[v][1:])
        inverses[v] = x
        chains[v] = tuple(to_y)
    return inverses, chains


def is_group_nonzero(
    p: MonoidPresentation,
    identity_bound: int = DEFAULT_IDENTITY_BOUND,
    bound: int = DEFAULT_BOUND,
    state_cap: int = DEFAULT_STATE_CAP,
) -> GroupTestVerdict:
    """Group, NotGroup (with a trace certificate) or Unknown (bounds exhausted)."""
    if identity_bound < 1 or bound < identity_bound + 1:
        raise BoundTooSmallError(
            f"need identity bound >= 1 and bound > identity bound, got {identity_bound} and {bound}"
        )
    if not p.generators:
        return GroupTestVerdict(UNKNOWN, gap="presentation has no generators", presentation=p)

    trace = solve_graph_trace(p.graph)
    if trace.feasible:
        return GroupTestVerdict(NOT_GROUP, trace=trace, presentation=p)

    found = None
    for depth in _depths(identity_bound + 1, bound):
        found = _find_identity(p, identity_bound, depth, state_cap)
        if found is not None:
            break
    if found is None:
        logger.info("no identity candidate of degree <= %d within bound %d", identity_bound, bound)
        return GroupTestVerdict(
            UNKNOWN, trace=trace, gap=f"no identity candidate of degree <= {identity_bound} within bound {bound}",
            presentation=p,
        )
    f, identity_chains = found

    inv = None
    for depth in _depths(f.degree + 1, bound):
        inv = _find_inverses(p, f, identity_chains, depth, state_cap)
        if inv is not None:
            break
    if inv is None:
        logger.info("identity %s found but some generator has no inverse within bound %d", p.format(f), bound)
        return GroupTestVerdict(
            UNKNOWN, identity=f, identity_chains=identity_chains, trace=trace,
            gap=f"inverses not found within bound {bound}", presentation=p,
        )
    inverses, inverse_chains = inv
    return GroupTestVerdict(GROUP, f, inverses, identity_chains, inverse_chains, trace, presentation=p)
