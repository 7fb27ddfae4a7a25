"""JSON formats.

Semigroups: ``{"order": n, "table": [[...]], "labels": [...]}`` or
``{"degree": m, "generators": [[...], ...]}``, both 0-indexed.
Matrices are lists of ``"0110"`` rows. Modules carry their carrier as
bitstrings (or, for abstract carriers, a join table) plus an action table of
element indices, one row per semigroup element.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .bits import from_bitstring
from .errors import InputError
from .lattice import BoolMatrix, SpanLattice
from .modules import BModule
from .semigroup import FiniteSemigroup, GreenStructure, eggbox, j_class_geometry

SCHEMA_VERSION = 1


def semigroup_from_json(data: dict[str, Any]) -> FiniteSemigroup:
    if not isinstance(data, dict):
        raise InputError("semigroup JSON must be an object")
    if "table" in data:
        table = data["table"]
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise InputError("'table' must be a list of lists")
        if "order" in data and data["order"] != len(table):
            raise InputError(f"'order' {data['order']} disagrees with table size {len(table)}")
        return FiniteSemigroup.from_table(table, data.get("labels"))
    if "generators" in data:
        if "degree" not in data:
            raise InputError("transformation input needs 'degree'")
        return FiniteSemigroup.from_transformations(int(data["degree"]), data["generators"])
    raise InputError("expected either 'table' or 'generators'")


def semigroup_to_json(S: FiniteSemigroup) -> dict[str, Any]:
    out: dict[str, Any] = {"order": S.order, "table": [list(r) for r in S.table]}
    if S.labels:
        out["labels"] = list(S.labels)
    return out


def load_semigroup(path: str | Path) -> FiniteSemigroup:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return semigroup_from_json(data)


def matrix_to_json(m: BoolMatrix) -> list[str]:
    return m.to_strings()


def matrix_from_json(rows: list[str]) -> BoolMatrix:
    return BoolMatrix.from_strings(rows)


def module_to_json(M: BModule) -> dict[str, Any]:
    L = M.carrier
    return {
        "width": L.width,
        "elements": [L.label(i) for i in range(len(L))],
        "action": [list(row) for row in M.action],
    }


def module_from_json(data: dict[str, Any], S: FiniteSemigroup) -> BModule:
    if "join" in data:
        lat, embed = SpanLattice.from_join_table(data["join"])
        k = len(embed)
        action = []
        for row in data["action"]:
            new = [0] * k
            for m, v in enumerate(row):
                new[embed[m]] = embed[v]
            action.append(tuple(new))
        return BModule(lat, S, tuple(action))
    elems = [from_bitstring(e) for e in data["elements"]]
    width = data.get("width", len(data["elements"][0]) if elems else 0)
    lat = SpanLattice.from_vectors(width, elems)
    if len(lat) != len(elems):
        raise InputError("duplicate carrier elements")
    if any((a | b) not in lat.index for a in elems for b in elems) or 0 not in lat.index:
        raise InputError("carrier is not join-closed with zero")
    pos = [lat.index[v] for v in elems]
    action = []
    for row in data["action"]:
        if len(row) != len(elems):
            raise InputError("action row length differs from carrier size")
        new = [0] * len(elems)
        for m, v in enumerate(row):
            new[pos[m]] = pos[v]
        action.append(tuple(new))
    if len(action) != S.order:
        raise InputError("action needs one row per semigroup element")
    return BModule(lat, S, tuple(action))


def lattice_report(L: SpanLattice) -> dict[str, Any]:
    sji = set(L.sji)
    return {
        "elements": [L.label(i) for i in range(len(L))],
        "hasse": [list(e) for e in L.hasse_edges()],
        "sji": [i in sji for i in range(len(L))],
    }


def green_to_json(S: FiniteSemigroup, G: GreenStructure) -> dict[str, Any]:
    jclasses = []
    for j in range(G.num_j_classes):
        rec: dict[str, Any] = {
            "id": j,
            "elements": G.j_members(j),
            "regular": G.regular[j],
            "eggbox": eggbox(S, G, j),
        }
        if G.regular[j]:
            geo = j_class_geometry(S, G, j)
            sub, emb = G.maximal_subgroups[j]
            rec.update(
                idempotent=G.transversal[j],
                r_classes=[list(c) for c in geo.r_classes],
                l_classes=[list(c) for c in geo.l_classes],
                maximal_subgroup=list(emb),
            )
        jclasses.append(rec)
    return {
        "order": S.order,
        "r_class": list(G.r_class),
        "l_class": list(G.l_class),
        "j_class": list(G.j_class),
        "h_class": list(G.h_class),
        "j_order": [list(p) for p in G.j_order()],
        "idempotents": sorted(G.idempotents),
        "j_classes": jclasses,
    }
