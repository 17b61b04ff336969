"""JSON file formats.

All writers emit ``json.dumps(..., sort_keys=True, indent=2)`` plus a newline,
so parsing a canonical file and writing it back is byte-identical.  Words in
presentation files list generator names in diagrammatic order (first applied
first).
"""

from __future__ import annotations

import json

from .covers import CoverReport, Representation
from .fpcat import CatPresentation, MorphismWord, RewriteSystem
from .ordinal import OrdinalMap
from .preorder import FiniteTopology, Preorder, Relation
from .sset import SimplexRef, SimplicialMap, SimplicialSet


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# simplicial sets


def ref_to_json(r: SimplexRef) -> dict:
    out = {"dim": r.dim, "id": r.index}
    if r.is_degenerate():
        out["degeneracy"] = list(r.degeneracy.values)
    return out


def ref_from_json(d: dict) -> SimplexRef:
    dim = int(d["dim"])
    if "degeneracy" in d:
        vals = tuple(int(v) for v in d["degeneracy"])
        return SimplexRef(dim, int(d["id"]), OrdinalMap(vals, max(vals)))
    return SimplexRef.nd(dim, int(d["id"]))


def sset_to_json(X: SimplicialSet) -> dict:
    levels = []
    for k, level in enumerate(X.face_table):
        rows = []
        for j, fs in enumerate(level):
            row = {"id": j}
            if X.label(k, j) is not None:
                row["label"] = str(X.label(k, j))
            if k:
                row["faces"] = [ref_to_json(f) for f in fs]
            rows.append(row)
        levels.append(rows)
    return {"cap": X.cap, "simplices": levels}


def sset_from_json(d: dict) -> SimplicialSet:
    faces, labels = [], []
    for k, rows in enumerate(d["simplices"]):
        rows = sorted(rows, key=lambda r: int(r["id"]))
        if [int(r["id"]) for r in rows] != list(range(len(rows))):
            raise ValueError(f"simplex ids in dimension {k} must be 0..{len(rows) - 1}")
        faces.append([tuple(ref_from_json(f) for f in r.get("faces", [])) for r in rows])
        labels.append([r.get("label") for r in rows])
    return SimplicialSet(int(d["cap"]), faces, labels)


def map_to_json(f: SimplicialMap) -> dict:
    return {
        "source": sset_to_json(f.source),
        "target": sset_to_json(f.target),
        "assignment": [{"dim": k, "id": j, "image": ref_to_json(f.assignment[(k, j)])}
                       for k, j in sorted(f.assignment)],
    }


def map_from_json(d: dict) -> SimplicialMap:
    src, tgt = sset_from_json(d["source"]), sset_from_json(d["target"])
    assignment = {(int(a["dim"]), int(a["id"])): ref_from_json(a["image"]) for a in d["assignment"]}
    return SimplicialMap(src, tgt, assignment)


# presentations and rewriting


def presentation_to_json(p: CatPresentation) -> dict:
    rels = []
    for w1, w2 in p.relations:
        row = [list(w1.letters), list(w2.letters)]
        if not w1.letters and not w2.letters:
            # both sides empty: record the object explicitly
            row.append(w1.src)
        rels.append(row)
    return {
        "objects": list(p.objects),
        "generators": [{"name": g.name, "src": g.src, "tgt": g.tgt} for g in p.generators],
        "relations": rels,
    }


def presentation_from_json(d: dict) -> CatPresentation:
    gens = [(g["name"], g["src"], g["tgt"]) for g in d["generators"]]
    p = CatPresentation(d["objects"], gens, ())
    rels = []
    for row in d.get("relations", []):
        if len(row) == 3:
            a = row[2]
            rels.append((p.word(row[0], a), p.word(row[1], a)))
        else:
            rels.append(p.relation_words(row[0], row[1]))
    return CatPresentation(d["objects"], gens, rels)


def rewrite_to_json(rs: RewriteSystem) -> dict:
    return {
        "presentation": presentation_to_json(rs.presentation),
        "rules": [[list(l), list(r)] for l, r in sorted(rs.rules.items(), key=lambda kv: rs.presentation.shortlex(kv[0]))],
        "status": "complete" if rs.complete else "incomplete",
        "note": rs.note,
    }


def rewrite_from_json(d: dict) -> RewriteSystem:
    p = presentation_from_json(d["presentation"])
    rules = {tuple(l): tuple(r) for l, r in d["rules"]}
    return RewriteSystem(p, rules, d["status"] == "complete", d.get("note", ""))


def word_to_json(w: MorphismWord) -> dict:
    return {"src": w.src, "tgt": w.tgt, "letters": list(w.letters)}


# representations and reports


def representation_to_json(F: Representation) -> dict:
    return {
        "base": presentation_to_json(F.base),
        "vertex_sets": {a: [str(x) for x in xs] for a, xs in F.vertex_sets.items()},
        "edge_maps": {g: {str(x): str(y) for x, y in m.items()} for g, m in F.edge_maps.items()},
    }


def representation_from_json(d: dict) -> Representation:
    base = presentation_from_json(d["base"])
    return Representation(base, d["vertex_sets"], d["edge_maps"])


def _jsonable(x):
    if isinstance(x, SimplexRef):
        return ref_to_json(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def cover_report_to_json(r: CoverReport) -> dict:
    out = {"kind": r.kind, "ok": r.ok, "per_dim": list(r.per_dim),
           "counterexample": _jsonable(r.counterexample)}
    if r.monodromy_ok is not None:
        out["monodromy_ok"] = r.monodromy_ok
        out["characterizations_agree"] = r.agree
    return out


# preorders and topologies


def preorder_to_json(R: Relation) -> dict:
    pos = {x: k for k, x in enumerate(R.domain)}
    pairs = sorted(R.pairs, key=lambda p: (pos[p[0]], pos[p[1]]))
    return {"domain": [str(x) for x in R.domain], "pairs": [[str(a), str(b)] for a, b in pairs]}


def relation_from_json(d: dict) -> Relation:
    return Relation(d["domain"], [tuple(p) for p in d["pairs"]])


def preorder_from_json(d: dict) -> Preorder:
    return Preorder(d["domain"], [tuple(p) for p in d["pairs"]])


def topology_to_json(T: FiniteTopology) -> dict:
    pos = {x: k for k, x in enumerate(T.points)}
    opens = sorted((sorted(u, key=pos.__getitem__) for u in T.opens), key=lambda u: (len(u), [pos[x] for x in u]))
    return {"points": [str(x) for x in T.points], "opens": [[str(x) for x in u] for u in opens]}


def topology_from_json(d: dict) -> FiniteTopology:
    return FiniteTopology(d["points"], d["opens"])


READERS = {
    "sset": sset_from_json,
    "map": map_from_json,
    "presentation": presentation_from_json,
    "rewrite": rewrite_from_json,
    "representation": representation_from_json,
    "preorder": relation_from_json,
    "topology": topology_from_json,
}

WRITERS = {
    "sset": sset_to_json,
    "map": map_to_json,
    "presentation": presentation_to_json,
    "rewrite": rewrite_to_json,
    "representation": representation_to_json,
    "preorder": preorder_to_json,
    "topology": topology_to_json,
}


def detect_format(d: dict) -> str:
    if "simplices" in d:
        return "sset"
    if "assignment" in d:
        return "map"
    if "rules" in d:
        return "rewrite"
    if "vertex_sets" in d:
        return "representation"
    if "generators" in d:
        return "presentation"
    if "pairs" in d:
        return "preorder"
    if "opens" in d:
        return "topology"
    raise ValueError("unrecognised file format")


def roundtrip(text: str) -> str:
    """Parse a file of any supported format and write it back canonically."""
    d = json.loads(text)
    fmt = detect_format(d)
    return dumps(WRITERS[fmt](READERS[fmt](d)))
