"""Input and output documents (UTF-8 JSON).

A self-similar graph document has the keys ``vertices``, ``edges``, ``group``,
``action`` and ``cocycle`` plus an optional ``name``. A graph document has only
``vertices`` and ``edges``; the quotient export adds ``orbit_of``,
``representatives`` and ``edge_origin``. Duplicate and unknown keys are
rejected before any axiom is looked at.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from pathlib import Path as FsPath
from typing import Any

from .model import Graph, SelfSimilarGraph, to_raw, validate
from .quotient import QuotientGraph

logger = logging.getLogger(__name__)

SSG_KEYS = {"name", "vertices", "edges", "group", "action", "cocycle"}
SSG_REQUIRED = {"vertices", "edges", "group", "action", "cocycle"}
GRAPH_KEYS = {"vertices", "edges", "orbit_of", "representatives", "edge_origin"}
GROUP_KEYS = {"elements", "identity", "table"}
ACTION_KEYS = {"vertices", "edges"}
EDGE_KEYS = {"id", "d", "r"}


class DocumentParseError(ValueError):
    """Raised when a document is not well-formed JSON of the expected shape."""


def _reject_duplicates(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in pairs:
        if key in out:
            raise DocumentParseError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _loads(text: str) -> Any:
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(f"not valid JSON: {exc}") from exc


def _keys(obj: Any, where: str, allowed: set[str], required: frozenset[str] | set[str] = frozenset()) -> Mapping:
    if not isinstance(obj, Mapping):
        raise DocumentParseError(f"{where}: expected an object")
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise DocumentParseError(f"{where}: unknown key(s) {', '.join(map(repr, unknown))}")
    missing = sorted(required - set(obj))
    if missing:
        raise DocumentParseError(f"{where}: missing key(s) {', '.join(map(repr, missing))}")
    return obj


def _strings(obj: Any, where: str) -> list[str]:
    if not isinstance(obj, list) or not all(isinstance(x, str) for x in obj):
        raise DocumentParseError(f"{where}: expected a list of strings")
    return obj


def _table(obj: Any, where: str) -> None:
    if not isinstance(obj, Mapping):
        raise DocumentParseError(f"{where}: expected an object of objects")
    for row_key, row in obj.items():
        if not isinstance(row, Mapping) or not all(isinstance(v, str) for v in row.values()):
            raise DocumentParseError(f"{where}[{row_key}]: expected an object of strings")


def _edges(obj: Any, where: str) -> None:
    if not isinstance(obj, list):
        raise DocumentParseError(f"{where}: expected a list")
    for i, e in enumerate(obj):
        _keys(e, f"{where}[{i}]", EDGE_KEYS, EDGE_KEYS)
        if not all(isinstance(e[k], str) for k in EDGE_KEYS):
            raise DocumentParseError(f"{where}[{i}]: id, d and r must be strings")


def parse_document(text: str) -> dict[str, Any]:
    """Shape-checked raw description, ready for ``model.validate``."""
    doc = _loads(text)
    _keys(doc, "document", SSG_KEYS, SSG_REQUIRED)
    if "name" in doc and not isinstance(doc["name"], str):
        raise DocumentParseError("name: expected a string")
    _strings(doc["vertices"], "vertices")
    _edges(doc["edges"], "edges")
    group = _keys(doc["group"], "group", GROUP_KEYS, GROUP_KEYS)
    _strings(group["elements"], "group.elements")
    if not isinstance(group["identity"], str):
        raise DocumentParseError("group.identity: expected a string")
    _table(group["table"], "group.table")
    action = _keys(doc["action"], "action", ACTION_KEYS, ACTION_KEYS)
    _table(action["vertices"], "action.vertices")
    _table(action["edges"], "action.edges")
    _table(doc["cocycle"], "cocycle")
    return doc


def parse_graph_document(text: str) -> Graph:
    doc = _loads(text)
    _keys(doc, "document", GRAPH_KEYS, {"vertices", "edges"})
    vertices = _strings(doc["vertices"], "vertices")
    _edges(doc["edges"], "edges")
    return Graph.from_triples(vertices, ((e["id"], e["d"], e["r"]) for e in doc["edges"]))


def read_text(path: str | FsPath) -> str:
    try:
        return FsPath(path).read_bytes().decode("utf-8")
    except OSError as exc:
        raise DocumentParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise DocumentParseError(f"{path} is not UTF-8: {exc}") from exc


def load_document(path: str | FsPath) -> dict[str, Any]:
    return parse_document(read_text(path))


def read_ssg(path: str | FsPath) -> SelfSimilarGraph:
    """Parse and validate; raises ``DocumentParseError`` or ``model.ValidationError``."""
    raw = load_document(path)
    if "name" not in raw:
        raw = {**raw, "name": FsPath(path).stem}
    return validate(raw)


def ssg_document(ssg: SelfSimilarGraph) -> dict[str, Any]:
    doc: dict[str, Any] = {"name": ssg.name} if ssg.name else {}
    doc.update(to_raw(ssg))
    return doc


def graph_document(graph: Graph) -> dict[str, Any]:
    return {
        "vertices": list(graph.vertices),
        "edges": [{"id": e.id, "d": e.d, "r": e.r} for e in graph.edges],
    }


def quotient_document(q: QuotientGraph) -> dict[str, Any]:
    doc = graph_document(q.graph)
    doc["orbit_of"] = dict(q.orbit_of)
    doc["representatives"] = dict(q.rep)
    doc["edge_origin"] = dict(q.edge_origin)
    return doc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write_document(doc: Any, path: str | FsPath) -> FsPath:
    p = FsPath(path)
    p.write_text(dumps(doc), encoding="utf-8")
    logger.info("wrote %s", p)
    return p
