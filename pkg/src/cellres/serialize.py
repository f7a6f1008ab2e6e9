"""JSON interchange for complexes, free complexes, morphisms, arrangements and graphs."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import monomial as mono
from .complex import EMPTY, Cell, LabeledComplex, validate
from .families import Graph
from .linalg import QQ, FieldChoice
from .morphism import MultiplicationMorphism
from .resolution import FreeComplex
from .subdivision import ArrangementSpec, HyperplaneFamily


class SchemaError(ValueError):
    pass


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def _require(d: dict, key: str, kind, where: str):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError(f"{where}: missing key {key!r}")
    v = d[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise SchemaError(f"{where}: {key!r} has the wrong type")
    return v


def _int_list(v, where: str) -> tuple:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise SchemaError(f"{where}: expected a list of integers")
    return tuple(v)


# ------------------------------------------------------------ complexes

def complex_to_json(X: LabeledComplex) -> dict:
    cells = [{"id": c.id, "dim": c.dim, "vertices": sorted(c.vertices), "label": list(c.label)}
             for c in X.cells.values() if c.id != EMPTY]
    inc = [{"cell": c, "facet": f, "sign": s}
           for (c, f), s in sorted(X.incidence.items()) if f != EMPTY]
    return {"variables": list(X.names), "cells": cells, "incidence": inc}


def complex_from_json(data: dict) -> LabeledComplex:
    names = _require(data, "variables", list, "complex")
    if not all(isinstance(x, str) for x in names):
        raise SchemaError("complex: variables must be strings")
    n = len(names)
    cells = []
    for k, c in enumerate(_require(data, "cells", list, "complex")):
        where = f"cell #{k}"
        cid = _require(c, "id", int, where)
        dim = _require(c, "dim", int, where)
        verts = _int_list(_require(c, "vertices", list, where), where)
        label = _int_list(_require(c, "label", list, where), where)
        if cid == EMPTY:
            raise SchemaError(f"{where}: id {EMPTY} is reserved for the empty cell")
        if len(label) != n:
            raise SchemaError(f"{where}: label length {len(label)} != {n} variables")
        cells.append(Cell(cid, dim, frozenset(verts), label))
    ids = [c.id for c in cells]
    if len(set(ids)) != len(ids):
        raise SchemaError("complex: duplicate cell ids")
    inc = {}
    for k, e in enumerate(_require(data, "incidence", list, "complex")):
        where = f"incidence #{k}"
        key = (_require(e, "cell", int, where), _require(e, "facet", int, where))
        inc[key] = _require(e, "sign", int, where)
    X = LabeledComplex.build(n, cells, inc, names)
    problems = validate(X)
    if problems:
        raise SchemaError("complex does not validate: " + "; ".join(problems[:5]))
    return X


# ------------------------------------------------------------ free complexes

def _scalar_out(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return int(v)


def _scalar_in(v, field: FieldChoice, where: str):
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise SchemaError(f"{where}: coefficient must be an integer or 'p/q'")
    try:
        return field.coerce(Fraction(v))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: bad coefficient {v!r}") from exc


def free_complex_to_json(F: FreeComplex) -> dict:
    diffs = []
    for i in range(1, len(F.modules)):
        entries = [{"row": r, "col": c, "coeff": _scalar_out(v), "monomial": list(F.entry_monomial(i, r, c))}
                   for (r, c), v in sorted(F.d(i).items()) if v != 0]
        diffs.append(entries)
    return {"field": F.field.name, "modules": [[list(a) for a in m] for m in F.modules], "differentials": diffs}


def free_complex_from_json(data: dict, field: FieldChoice | None = None) -> FreeComplex:
    if field is None:
        field = FieldChoice.parse(data.get("field", "q")) if isinstance(data, dict) else QQ
    modules = [[_int_list(a, "module degree") for a in m] for m in _require(data, "modules", list, "free complex")]
    if not modules:
        raise SchemaError("free complex: no modules")
    n = len(modules[0][0]) if modules[0] else 0
    diffs = []
    for i, entries in enumerate(_require(data, "differentials", list, "free complex"), start=1):
        mat = {}
        for k, e in enumerate(entries):
            where = f"d_{i} entry #{k}"
            r, c = _require(e, "row", int, where), _require(e, "col", int, where)
            if not (0 <= r < len(modules[i - 1]) and 0 <= c < len(modules[i])):
                raise SchemaError(f"{where}: index out of range")
            v = _scalar_in(e.get("coeff"), field, where)
            mon = tuple(a - b for a, b in zip(modules[i][c], modules[i - 1][r]))
            if "monomial" in e and _int_list(e["monomial"], where) != mon:
                raise SchemaError(f"{where}: monomial does not match the degrees")
            mat[(r, c)] = v
        diffs.append(mat)
    if len(diffs) != len(modules) - 1:
        raise SchemaError("free complex: need one differential per module after the first")
    return FreeComplex(n, [list(m) for m in modules], diffs, field, None)


# ------------------------------------------------------------ the rest

def morphism_to_json(g: MultiplicationMorphism) -> dict:
    return {"multiplier": list(g.multiplier), "cell_map": [[s, t] for s, t in sorted(g.cell_map.items())]}


def arrangement_to_json(spec: ArrangementSpec) -> dict:
    return {"vertices": [list(p) for p in spec.vertex_points],
            "families": [{"functional": list(f.functional)} for f in spec.families]}


def arrangement_from_json(data: dict) -> ArrangementSpec:
    pts = [_int_list(p, "vertex") for p in _require(data, "vertices", list, "arrangement")]
    fams = []
    for k, f in enumerate(data.get("families", [])):
        fams.append(HyperplaneFamily(_int_list(_require(f, "functional", list, f"family #{k}"), f"family #{k}")))
    try:
        return ArrangementSpec(tuple(pts), tuple(fams))
    except ValueError as exc:
        raise SchemaError(f"arrangement: {exc}") from exc


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_json(data: dict) -> Graph:
    n = _require(data, "n", int, "graph")
    edges = [_int_list(e, "edge") for e in _require(data, "edges", list, "graph")]
    if any(len(e) != 2 for e in edges):
        raise SchemaError("graph: every edge needs two endpoints")
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise SchemaError(f"graph: {exc}") from exc


def export_complex(X: LabeledComplex, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(complex_to_json(X)))


def import_complex(path: str) -> LabeledComplex:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: {exc}") from exc
    return complex_from_json(data)
