"""JSON quiver documents, DOT export and plain-text summaries."""

from __future__ import annotations

import json

from .dynkin import diagram
from .errors import InvalidQuiver
from .tquiver import Covering, QuiverMeta, TranslationQuiver, check_mesh, tau_orbits
from .ztrans import AffineAutomorphism, ZVertex

FORMAT_VERSION = 1


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _label_out(lab):
    return list(lab) if isinstance(lab, tuple) else lab


def quiver_to_dict(q: TranslationQuiver) -> dict:
    meta = {
        "family": q.meta.family,
        "rank": q.meta.rank,
        "level": q.meta.level,
        "standard": q.meta.standard,
        "connected": q.meta.connected,
        "mesh_required": q.meta.mesh_required,
        "covering": None,
    }
    if q.covering is not None:
        f = q.covering.phi
        meta["covering"] = {
            "diagram": {"family": q.covering.diagram.family, "rank": q.covering.diagram.rank},
            "phi": {"g": list(f.g), "shift": list(f.shift)},
        }
    return {
        "format_version": FORMAT_VERSION,
        "meta": meta,
        "vertices": [{"id": v, "label": _label_out(q.labels[v])} for v in range(q.n)],
        "arrows": [[a, b] for a, b in q.arrows],
        "tau": list(q.tau),
    }


def quiver_from_dict(doc: dict) -> TranslationQuiver:
    try:
        version = doc["format_version"]
        if version != FORMAT_VERSION:
            raise InvalidQuiver(f"unsupported format_version {version}")
        verts = doc["vertices"]
        if [v["id"] for v in verts] != list(range(len(verts))):
            raise InvalidQuiver("vertex ids must be 0..N-1 in order")
        labels = tuple(
            ZVertex(*v["label"]) if isinstance(v["label"], list) else v["label"] for v in verts
        )
        arrows = tuple((int(a), int(b)) for a, b in doc["arrows"])
        tau = tuple(int(t) for t in doc["tau"])
        m = doc["meta"]
        meta = QuiverMeta(
            family=m.get("family"),
            rank=m.get("rank"),
            level=m.get("level"),
            standard=bool(m.get("standard", True)),
            connected=bool(m.get("connected", True)),
            mesh_required=bool(m.get("mesh_required", True)),
        )
        covering = None
        if m.get("covering"):
            c = m["covering"]
            d = diagram(c["diagram"]["family"], c["diagram"]["rank"])
            f = AffineAutomorphism(d, tuple(c["phi"]["g"]), tuple(c["phi"]["shift"]))
            covering = Covering(d, f)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidQuiver):
            raise
        raise InvalidQuiver(f"malformed quiver document: {exc}") from exc
    q = TranslationQuiver(labels, arrows, tau, meta, covering)
    if meta.mesh_required:
        check_mesh(q)
    return q


def quiver_to_json(q: TranslationQuiver) -> str:
    return dumps(quiver_to_dict(q))


def quiver_from_json(text: str) -> TranslationQuiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidQuiver(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidQuiver("quiver document must be a JSON object")
    return quiver_from_dict(doc)


def _vertex_text(q: TranslationQuiver, v: int) -> str:
    lab = q.labels[v]
    if isinstance(lab, tuple):
        return f"{lab[0]},{lab[1]}"
    return str(lab) if lab is not None else str(v)


def _graph_name(q: TranslationQuiver) -> str:
    m = q.meta
    if m.family and m.rank:
        name = f"{m.family}{m.rank}"
        return name + (f"_u{m.level}" if m.level else "")
    return "Q"


def to_dot(q: TranslationQuiver) -> str:
    lines = [f'digraph "{_graph_name(q)}" {{', "  node [shape=circle];"]
    for v in range(q.n):
        lines.append(f'  {v} [label="{_vertex_text(q, v)}"];')
    for a, b in q.arrows:
        lines.append(f"  {a} -> {b};")
    for v in range(q.n):
        lines.append(f'  {v} -> {q.tau[v]} [style=dashed, label="tau", constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_text(q: TranslationQuiver, spec=None) -> str:
    orbits = tau_orbits(q)
    lines = [
        f"quiver {_graph_name(q)}",
        f"vertices: {q.n}",
        f"arrows: {len(q.arrows)}",
        f"tau-orbits: {len(orbits)} (lengths {', '.join(str(len(o)) for o in orbits)})",
        f"connected: {q.meta.connected}",
    ]
    if spec is not None:
        lines.append(f"twist: {spec.twist}")
        lines.append(
            f"rectangle length: {spec.rectangle_length} "
            f"(period {spec.period}, pairing {spec.pairing})"
        )
    lines.append("")
    lines.append("id\tlabel\ttau\tout")
    for v in range(q.n):
        outs = " ".join(str(w) for w in q.out_neighbors[v])
        lines.append(f"{v}\t{_vertex_text(q, v)}\t{q.tau[v]}\t{outs}")
    return "\n".join(lines) + "\n"


def report_text(report) -> str:
    r = report.as_dict()
    p = r["parameters"]
    lines = [
        f"theorem {r['theorem']}  " + " ".join(f"{k}={p[k]}" for k in sorted(p)),
        "source: {family}{rank} level {level}, {vertices} vertices".format(**r["source"]),
        "target: {family}{rank} level {level}, {vertices} vertices".format(**r["target"]),
        "hypotheses:",
    ]
    lines += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in r["hypotheses"]]
    lines.append("checklist:")
    lines += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in r["checklist"]]
    lines.append(f"deleted rows: {r['deletion']['rows']}  ({len(r['deletion']['vertices'])} vertices)")
    lines.append(f"tau-stable: {r['tau_stable']}")
    lines.append(f"quotient vertices: {r['quotient_vertices']}")
    if "exceptional_orbits" in r:
        ex = r["exceptional_orbits"]
        lines.append(f"exceptional tau-orbits: quotient {ex['quotient']}, target {ex['target']}")
    lines.append(f"isomorphic: {r['isomorphic']}")
    if r["hom_checked"] is not None:
        lines.append(f"hom matrices agree: {r['hom_checked']}")
    if r.get("search_exhausted"):
        lines.append("no deletion of the searched shape gives an isomorphism")
    if "open_question" in r:
        lines.append(f"note: {r['open_question']}")
    lines.append(f"assumptions: {r['assumptions']}")
    return "\n".join(lines) + "\n"
