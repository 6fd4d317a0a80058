"""Shipped example instances.

``CATALOG`` holds the named self-similar graphs the ``example`` and
``selfcheck`` commands work with; ``curated_graphs`` is the fixed corpus of
small source-free graphs (trivial group) used to cross-check the monoid test
against the graph criteria.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .model import FinGroup, Graph, SelfSimilarGraph, build

RING_SIZES = (2, 3, 5)


class UnknownExampleError(KeyError):
    """Raised when a catalog name is not shipped."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    build: Callable[[int], SelfSimilarGraph]
    takes_n: bool = False
    default_n: int = 2


def _wrap(i: int, n: int) -> int:
    """Index ``i`` reduced into ``1..n``."""
    return (i - 1) % n + 1


def ring_graph(n: int) -> Graph:
    """A hub ``v`` fed by every ring vertex ``w_i``, the ring linked both ways.

    ``e_i: w_i -> v``, ``f_i: w_{i+1} -> w_i`` and ``g_i: w_i -> w_{i+1}``.
    """
    if n < 1:
        raise ValueError("ring size must be at least 1")
    vertices = ["v"] + [f"w{i}" for i in range(1, n + 1)]
    triples: list[tuple[str, str, str]] = []
    for i in range(1, n + 1):
        triples.append((f"e{i}", f"w{i}", "v"))
    for i in range(1, n + 1):
        triples.append((f"f{i}", f"w{_wrap(i + 1, n)}", f"w{i}"))
    for i in range(1, n + 1):
        triples.append((f"g{i}", f"w{i}", f"w{_wrap(i + 1, n)}"))
    return Graph.from_triples(vertices, triples)


def rotating_ring(n: int) -> SelfSimilarGraph:
    """``Z/n`` turning the ring by ``k`` steps, ``phi(k, e) = k``."""
    graph = ring_graph(n)
    group = FinGroup.cyclic(n)
    vertex_action: dict[str, dict[str, str]] = {}
    edge_action: dict[str, dict[str, str]] = {}
    for k in range(n):
        g = str(k)
        vertex_action[g] = {"v": "v", **{f"w{i}": f"w{_wrap(i + k, n)}" for i in range(1, n + 1)}}
        edge_action[g] = {
            f"{kind}{i}": f"{kind}{_wrap(i + k, n)}" for kind in "efg" for i in range(1, n + 1)
        }
    return build(graph, group, vertex_action, edge_action, name=f"ring-{n}")


def plain(graph: Graph, name: str = "") -> SelfSimilarGraph:
    """``graph`` with the trivial group."""
    return build(graph, FinGroup.trivial(), name=name)


def _loops(vertex: str, count: int, prefix: str = "l") -> list[tuple[str, str, str]]:
    return [(f"{prefix}{i}", vertex, vertex) for i in range(1, count + 1)]


def one_loop() -> Graph:
    return Graph.from_triples(["v"], [("e", "v", "v")])


def two_loops() -> Graph:
    return Graph.from_triples(["v"], [("a", "v", "v"), ("b", "v", "v")])


def two_cycle() -> Graph:
    return Graph.from_triples(["u", "w"], [("a", "u", "w"), ("b", "w", "u")])


def fixed_loops(count: int) -> SelfSimilarGraph:
    """``Z/2`` acting trivially with ``phi = 1``: the generator fixes every edge and restricts to 1."""
    graph = Graph.from_triples(["v"], _loops("v", count))
    group = FinGroup.cyclic(2)
    cocycle = {g: {e.id: "0" for e in graph.edges} for g in group.elements}
    return build(graph, group, cocycle=cocycle, name=f"fixed-loops-{count}")


def swapped_loops() -> SelfSimilarGraph:
    """``Z/2`` exchanging the two loops at one vertex."""
    graph = two_loops()
    group = FinGroup.cyclic(2)
    edge_action = {"0": {"a": "a", "b": "b"}, "1": {"a": "b", "b": "a"}}
    return build(graph, group, edge_action=edge_action, name="swapped-loops")


def split_orbits() -> SelfSimilarGraph:
    """Two ``Z/2`` orbits of loops with nothing between them; not weakly transitive."""
    graph = Graph.from_triples(
        ["a1", "a2", "b1", "b2"],
        [("la1", "a1", "a1"), ("la2", "a2", "a2"), ("lb1", "b1", "b1"), ("lb2", "b2", "b2")],
    )
    group = FinGroup.cyclic(2)
    swap_v = {"a1": "a2", "a2": "a1", "b1": "b2", "b2": "b1"}
    swap_e = {"la1": "la2", "la2": "la1", "lb1": "lb2", "lb2": "lb1"}
    vertex_action = {"0": {v: v for v in graph.vertices}, "1": swap_v}
    edge_action = {"0": {e: e for e in swap_e}, "1": swap_e}
    return build(graph, group, vertex_action, edge_action, name="split-orbits")


def with_source() -> SelfSimilarGraph:
    """A loop fed by a vertex that receives nothing."""
    graph = Graph.from_triples(["s", "u"], [("a", "u", "u"), ("b", "s", "u")])
    return plain(graph, "with-source")


CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in (
        CatalogEntry("ring", "Z/n rotating a ring of n vertices around a hub, phi(k, e) = k", rotating_ring, True),
        CatalogEntry(
            "ring-plain", "the ring graph with the trivial group", lambda n: plain(ring_graph(n), f"ring-plain-{n}"), True
        ),
        CatalogEntry("one-loop", "one vertex, one loop", lambda _n: plain(one_loop(), "one-loop")),
        CatalogEntry("two-loops", "one vertex, two loops", lambda _n: plain(two_loops(), "two-loops")),
        CatalogEntry("two-cycle", "two vertices joined both ways", lambda _n: plain(two_cycle(), "two-cycle")),
        CatalogEntry("fixed-loop", "Z/2 fixing one loop with trivial restriction", lambda _n: fixed_loops(1)),
        CatalogEntry("fixed-two-loops", "Z/2 fixing two loops with trivial restriction", lambda _n: fixed_loops(2)),
        CatalogEntry("swapped-loops", "Z/2 exchanging two loops at one vertex", lambda _n: swapped_loops()),
        CatalogEntry("split-orbits", "two Z/2 orbits of loops, not weakly transitive", lambda _n: split_orbits()),
        CatalogEntry("with-source", "a loop fed by a source", lambda _n: with_source()),
    )
}


def get_example(name: str, n: int | None = None) -> SelfSimilarGraph:
    try:
        entry = CATALOG[name]
    except KeyError:
        raise UnknownExampleError(f"no example named {name!r}; try one of {', '.join(CATALOG)}") from None
    if n is not None and not entry.takes_n:
        raise ValueError(f"example {name!r} takes no size parameter")
    return entry.build(entry.default_n if n is None else n)


def catalog_instances() -> Iterable[SelfSimilarGraph]:
    """Every catalog entry, the sized ones at each shipped size."""
    for entry in CATALOG.values():
        sizes = RING_SIZES if entry.takes_n else (entry.default_n,)
        for n in sizes:
            yield entry.build(n)


# ---------------------------------------------------------------------------
# curated corpus (trivial group, at most 4 vertices and 6 edges)
# ---------------------------------------------------------------------------

_CURATED: dict[str, tuple[list[str], list[tuple[str, str, str]]]] = {
    "one-loop": (["v"], _loops("v", 1)),
    "two-loops": (["v"], _loops("v", 2)),
    "three-loops": (["v"], _loops("v", 3)),
    "two-cycle": (["u", "w"], [("a", "u", "w"), ("b", "w", "u")]),
    "two-cycle-loop": (["u", "w"], [("a", "u", "w"), ("b", "w", "u"), ("c", "u", "u")]),
    "two-cycle-two-loops": (["u", "w"], [("a", "u", "w"), ("b", "w", "u"), ("c", "u", "u"), ("d", "w", "w")]),
    "two-cycle-doubled": (["u", "w"], [("a", "u", "w"), ("b", "u", "w"), ("c", "w", "u")]),
    "complete-two": (["u", "w"], [("a", "u", "u"), ("b", "u", "w"), ("c", "w", "u"), ("d", "w", "w")]),
    "loop-feeds-vertex": (["u", "w"], [("a", "u", "u"), ("b", "u", "w")]),
    "two-loops-feed-vertex": (["u", "w"], [("a", "u", "u"), ("b", "u", "u"), ("c", "u", "w")]),
    "disjoint-loops": (["u", "w"], [("a", "u", "u"), ("b", "w", "w")]),
    "disjoint-double-loops": (["u", "w"], _loops("u", 2, "a") + _loops("w", 2, "b")),
    "bridged-double-loops": (["u", "w"], _loops("u", 2, "a") + _loops("w", 2, "b") + [("c", "u", "w")]),
    "three-cycle": (["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x")]),
    "three-cycle-chord": (["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "x", "z")]),
    "three-cycle-loop": (["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "x", "x")]),
    "three-cycle-back-edges": (
        ["x", "y", "z"],
        [("a", "x", "y"), ("b", "y", "z"), ("c", "z", "x"), ("d", "y", "x"), ("e", "z", "y"), ("f", "x", "z")],
    ),
    "double-loop-star": (["x", "y", "z"], _loops("x", 2) + [("a", "x", "y"), ("b", "x", "z")]),
    "four-cycle": (["p", "q", "s", "t"], [("a", "p", "q"), ("b", "q", "s"), ("c", "s", "t"), ("d", "t", "p")]),
    "four-cycle-chord": (
        ["p", "q", "s", "t"],
        [("a", "p", "q"), ("b", "q", "s"), ("c", "s", "t"), ("d", "t", "p"), ("e", "p", "s")],
    ),
    "four-cycle-two-chords": (
        ["p", "q", "s", "t"],
        [("a", "p", "q"), ("b", "q", "s"), ("c", "s", "t"), ("d", "t", "p"), ("e", "p", "s"), ("f", "s", "p")],
    ),
    "loop-chain": (["p", "q", "s"], [("a", "p", "p"), ("b", "p", "q"), ("c", "q", "s"), ("d", "s", "s")]),
    "two-cycles-joined": (
        ["p", "q", "s", "t"],
        [("a", "p", "q"), ("b", "q", "p"), ("c", "s", "t"), ("d", "t", "s"), ("e", "q", "s"), ("f", "t", "q")],
    ),
}


def curated_graphs() -> list[tuple[str, Graph]]:
    return [(name, Graph.from_triples(vs, ts)) for name, (vs, ts) in _CURATED.items()]
