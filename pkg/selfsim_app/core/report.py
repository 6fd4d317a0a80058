"""Plain-data and text renderings of analysis results.

Both renderings come from the same ``report_to_dict`` output, so the verdicts
they show cannot disagree. Rationals are written as ``p/q`` strings.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any

from .classifier import ClassificationReport, Verdict, Witness
from .graph_analysis import GCircuitWitness
from .model import Path
from .monoid import GroupTestVerdict, MonoidElement
from .trace_lp import TraceResult


def path_dict(path: Path) -> dict[str, Any]:
    if path.edges:
        return {"edges": list(path.edges)}
    return {"edges": [], "anchor": path.anchor}


def plain(obj: Any) -> Any:
    """JSON-ready copy of witness payloads."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Path):
        return path_dict(obj)
    if isinstance(obj, GCircuitWitness):
        return {"path": path_dict(obj.path), "twist": obj.twist}
    if isinstance(obj, Witness):
        return {"kind": obj.kind, **{k: plain(v) for k, v in obj.data.items()}}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [plain(x) for x in obj]
    if is_dataclass(obj):
        return {f.name: plain(getattr(obj, f.name)) for f in fields(obj)}
    return str(obj)


def verdict_dict(v: Verdict) -> dict[str, Any]:
    out: dict[str, Any] = {"value": v.value, "theorem": v.theorem}
    if v.witness is not None:
        out["witness"] = plain(v.witness)
    if v.gap:
        out["gap"] = v.gap
    if v.labels:
        out["labels"] = list(v.labels)
    return out


def trace_dict(t: TraceResult) -> dict[str, Any]:
    out: dict[str, Any] = {"exists": t.feasible, "g_invariant": t.g_invariant, "note": t.note}
    if t.solution is not None:
        out["weights"] = t.solution.as_strings()
    if t.certificate is not None:
        out["certificate"] = t.certificate.as_strings()
    return out


def _element(generators: Sequence[str], x: MonoidElement) -> dict[str, int]:
    return {v: c for v, c in zip(generators, x.counts) if c}


def group_test_dict(g: GroupTestVerdict) -> dict[str, Any]:
    p = g.presentation
    out: dict[str, Any] = {"verdict": g.verdict}
    if p is not None:
        out["relations"] = p.describe()
    if g.heuristic:
        out["heuristic"] = True
    if p is not None and g.identity is not None:
        out["identity"] = _element(p.generators, g.identity)
    if p is not None and g.inverses:
        out["inverses"] = {v: _element(p.generators, x) for v, x in g.inverses.items()}
        out["chain_lengths"] = {v: len(c) - 1 for v, c in g.inverse_chains.items()}
    if g.verdict == "NotGroup" and g.trace is not None:
        out["trace"] = trace_dict(g.trace)
    if g.gap:
        out["gap"] = g.gap
    return out


def report_to_dict(report: ClassificationReport) -> dict[str, Any]:
    q = report.quotient
    return {
        "name": report.name,
        "banner": report.banner,
        "summary": plain(report.summary),
        "notes": list(report.notes),
        "verdicts": {name: verdict_dict(v) for name, v in report.verdicts().items()},
        "dichotomy": report.dichotomy,
        "trace": trace_dict(report.trace),
        "monoid": {
            "E": group_test_dict(report.monoid),
            "quotient": group_test_dict(report.monoid_quotient),
        },
        "quotient": {
            **q.summary(),
            "circuits": [
                {"edges": list(c.path.edges), "has_entry": c.has_entry} for c in report.quotient_circuits
            ],
        },
        "g_circuit": plain(report.g_circuit),
        "infinite_vertices": [
            {
                "vertex": iv.vertex,
                "infinite": iv.infinite,
                **({"source": iv.source, "path": path_dict(iv.path), "g_only": iv.g_only} if iv.path else {}),
            }
            for iv in report.infinite_vertices
        ],
        "corroboration": list(report.corroboration),
    }


def render_text(doc: dict[str, Any]) -> str:
    """Human-readable report from :func:`report_to_dict` output."""
    lines = [f"== {doc['name']} =="]
    if doc.get("banner"):
        lines.append(f"!! {doc['banner']}")
    s = doc["summary"]
    lines.append(
        f"{s['vertices']} vertices, {s['edges']} edges, group of order {s['group_order']}, "
        f"source-free: {'yes' if s['source_free'] else 'no'}"
    )
    lines.append("")
    for name, v in doc["verdicts"].items():
        line = f"{name:16s} {v['value']:8s} {v['theorem']}"
        if "gap" in v:
            line += f" [gap: {v['gap']}]"
        if "witness" in v:
            line += f" [witness: {v['witness']['kind']}]"
        if "labels" in v:
            line += f" [{', '.join(v['labels'])}]"
        lines.append(line)
    lines.append(f"{'dichotomy':16s} {doc['dichotomy']}")
    lines.append("")
    t = doc["trace"]
    if t["exists"]:
        weights = ", ".join(f"{k}={w}" for k, w in t["weights"].items())
        lines.append(f"G-trace: {weights}")
    else:
        lines.append(f"G-trace: none (Farkas rows: {', '.join(t['certificate'])})")
    lines.append(f"  {t['note']}")
    for label, m in doc["monoid"].items():
        tag = " (heuristic)" if m.get("heuristic") else ""
        extra = f" [gap: {m['gap']}]" if "gap" in m else ""
        lines.append(f"monoid {label}{tag}: {m['verdict']}{extra}")
    qd = doc["quotient"]
    lines.append(
        f"quotient: {qd['vertices']} vertices, {qd['edges']} edges, {qd['loops']} loops, "
        f"{len(qd['circuits'])} elementary circuits"
    )
    infinite = [iv["vertex"] for iv in doc["infinite_vertices"] if iv["infinite"]]
    lines.append(f"infinite vertices: {', '.join(infinite) if infinite else 'none'}")
    for note in doc["corroboration"]:
        lines.append(f"  * {note}")
    lines.append("notes:")
    lines.extend(f"  - {n}" for n in doc["notes"])
    return "\n".join(lines) + "\n"


def render_failed_text(doc: dict[str, Any]) -> str:
    return f"== {doc['name']} ==\n!! not analysed: {doc['error']}\n"
