"""Command line front end: ``cellres <command> ...``.

Exit status is 0 on success, 1 when a checked property fails (for example a
covering witness FAILED) and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import monomial as mono
from .boothlueker import analyse
from .complex import f_vector, validate
from .covering import SCOPE_NOTE, covering_horizon, full_covering, syzygy_fg_witness, top_t
from .families import FAMILY_KINDS, FamilyError, Graph, make_family
from .linalg import FieldChoice
from .morphism import MorphismError, find_multiplication_morphisms, rename_variables
from .resolution import (SizeLimitError, acyclicity_failures, betti, betti_of_complex,
                         free_complex_from_labeled, is_minimal, minimalize)
from .serialize import (SchemaError, arrangement_from_json, complex_from_json, complex_to_json, dumps,
                        free_complex_to_json, graph_from_json, morphism_to_json)
from .subdivision import SubdivisionError, build_arrangement_complex


class InputError(Exception):
    pass


# ------------------------------------------------------------ inputs

def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc})") from exc


def _parse_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return graph_from_json(_load_json(args.graph))
    if getattr(args, "edges", None):
        edges = []
        for part in args.edges.split(","):
            a, _, b = part.strip().partition("-")
            if not a.isdigit() or not b.isdigit():
                raise InputError(f"bad edge {part!r}; use i-j")
            edges.append((int(a), int(b)))
        n = args.vertices or max(max(e) for e in edges)
        return Graph(n, tuple(edges))
    raise InputError("give --graph FILE or --edges 1-2,2-3")


def _family(args):
    kind = args.family
    if kind == "taylor":
        kind = "taylor_powers"
    if getattr(args, "family_spec", None):
        spec = _load_json(args.family_spec)
        kind = spec.get("kind")
        params = {k: v for k, v in spec.items() if k != "kind"}
        if kind == "taylor_powers":
            params["ideal"] = mono.parse_ideal(params["ideal"])[0]
        if kind == "edge_ideal":
            params["graph"] = graph_from_json(params["graph"])
        return make_family(kind, **params)
    if kind is None:
        raise InputError("give --family KIND or --family-spec FILE")
    params = {}
    if kind in ("maximal", "cube", "bounded", "path_Y", "path_Z", "path_Zbar"):
        if args.vars is None:
            raise InputError(f"family {kind} needs --vars")
        params["n"] = args.vars
    if kind == "bounded":
        if args.degree is None or args.bound is None:
            raise InputError("family bounded needs --degree and --bound")
        params["d"] = args.degree
        params["b"] = tuple(int(x) for x in args.bound.split(","))
    if kind == "taylor_powers":
        if not args.ideal:
            raise InputError("family taylor needs --ideal")
        params["ideal"] = mono.parse_ideal(args.ideal)[0]
    if kind == "edge_ideal":
        params["graph"] = _parse_graph(args)
    return make_family(kind, **params)


def _complex(args, index_attr: str = "index"):
    if getattr(args, "complex", None):
        return complex_from_json(_load_json(args.complex))
    if getattr(args, "arrangement", None):
        return build_arrangement_complex(arrangement_from_json(_load_json(args.arrangement)))
    if getattr(args, "family", None) or getattr(args, "family_spec", None):
        idx = getattr(args, index_attr, None)
        if idx is None:
            raise InputError("give --index for a family member")
        return _family(args).complex(idx)
    raise InputError("give --complex FILE, --arrangement FILE or --family KIND --index I")


# ------------------------------------------------------------ formatting

def _fmt_mono(a, names=None) -> str:
    return mono.format_monomial(a, names)


def _cell(labels: list) -> str:
    return "{" + ", ".join(labels) + "}"


def _table(rows: list) -> str:
    return "\n".join(rows) + "\n"


# ------------------------------------------------------------ commands

def cmd_build(args, field):
    X = _complex(args)
    data = complex_to_json(X)
    text = [f"complex over {X.n} variables ({', '.join(X.names)})",
            f"f-vector: {f_vector(X)}",
            f"validation: {'ok' if not validate(X) else 'FAILED'}"]
    return 0, data, text


def cmd_betti(args, field):
    if args.ideal:
        I, names = mono.parse_ideal(args.ideal)
        b = betti(I, field)
        data = {"ideal": [_fmt_mono(g, names) for g in I.generators], "betti": list(b), "field": field.name}
    else:
        X = _complex(args)
        b = betti_of_complex(free_complex_from_labeled(X, field))
        data = {"complex_f_vector": list(f_vector(X)), "betti": list(b), "field": field.name}
    return 0, data, [f"betti ({field}): {tuple(b)}"]


def cmd_acyclic(args, field):
    X = _complex(args)
    fails = acyclicity_failures(X, field)
    data = {"resolution": not fails, "field": field.name,
            "failures": [{"degree": list(b), "reduced_homology": list(r)} for b, r in fails]}
    text = [f"supports a resolution ({field}): {'yes' if not fails else 'no'}"]
    text += [f"  homology {r} at {_fmt_mono(b, X.names)}" for b, r in fails]
    return (0 if not fails else 1), data, text


def cmd_minimal(args, field):
    X = _complex(args)
    F = free_complex_from_labeled(X, field)
    G = minimalize(F, field)
    data = {"input_ranks": list(F.ranks()), "input_minimal": is_minimal(F), "minimal": free_complex_to_json(G)}
    text = [f"input ranks {F.ranks()} (minimal: {is_minimal(F)})", f"minimalized ranks {G.ranks()}"]
    return 0, data, text


def cmd_morphisms(args, field):
    if args.source and args.target:
        X = complex_from_json(_load_json(args.source))
        Y = complex_from_json(_load_json(args.target))
    else:
        if args.index is None:
            raise InputError("give --source/--target files or --family with --index (target)")
        fam = _family(args)
        X, Y = fam.complex(args.index - 1), fam.complex(args.index)
    maps = find_multiplication_morphisms(X, Y)
    data = {"morphisms": [morphism_to_json(g) for g in maps]}
    text = [f"{len(maps)} multiplication morphism(s)"] + [f"  multiply by {_fmt_mono(g.multiplier, Y.names)}" for g in maps]
    return 0, data, text


def _report_cells(rep, names):
    return [[_fmt_mono(a, names) for a in rep.labels[c]] for c in rep.uncovered()]


def cmd_covering(args, field):
    fam = _family(args)
    if args.index is not None:
        sources = [int(s) for s in args.sources.split(",")] if args.sources else list(range(fam.start, args.index))
        rep = full_covering(fam, args.index, sources)
        names = fam.complex(args.index).names
        data = {"family": rep.family, "target": rep.target, "sources": list(rep.sources),
                "covered": rep.covered, "uncovered": _report_cells(rep, names), "scope": SCOPE_NOTE}
        text = [f"{rep.family}: member {rep.target} from {list(rep.sources)}: "
                f"{'covered' if rep.covered else 'NOT covered'}"]
        text += ["  uncovered cell: " + _cell(c) for c in data["uncovered"]]
        text.append(f"scope: {SCOPE_NOTE}")
        return (0 if rep.covered else 1), data, text
    if args.max is None:
        raise InputError("give --max (horizon scan) or --index (single member)")
    h = covering_horizon(fam, args.max)
    per = {}
    text = [f"{h.family}: scanned members {fam.start}..{h.max_index}"]
    for i, rep in h.reports.items():
        names = fam.complex(i).names
        per[str(i)] = {"covered": rep.covered, "uncovered": _report_cells(rep, names)}
        line = f"  member {i}: {'covered' if rep.covered else 'NOT covered'}"
        if not rep.covered:
            line += f" ({len(rep.uncovered())} cell(s), e.g. {_cell(per[str(i)]['uncovered'][0])})"
        text.append(line)
    text.append(f"covering threshold: {h.threshold if h.threshold is not None else 'NONE'}")
    data = {"family": h.family, "max_index": h.max_index, "threshold": h.threshold,
            "members": per, "scope": SCOPE_NOTE}
    if h.reference is not None:
        data["reference_threshold"] = h.reference
        data["reference_discrepancy"] = h.discrepancy
        text.append(f"reference threshold n-1 = {h.reference}: "
                    f"{'DISCREPANCY with computed value' if h.discrepancy else 'agrees'}")
    text.append(f"scope: {SCOPE_NOTE}")
    return (0 if h.threshold is not None else 1), data, text


def cmd_witness(args, field):
    fam = _family(args)
    t = top_t(fam, args.horizon) if args.t == "top" else int(args.t)
    w = syzygy_fg_witness(fam, t, args.horizon)
    data = {"family": w.family, "t": w.t, "horizon": w.horizon, "status": w.status, "threshold": w.threshold,
            "generators": [[j, c] for j, c in w.generators],
            "uncovered": [{"index": i, "cell": c, "labels": [_fmt_mono(a, fam.complex(i).names) for a in labs]}
                          for i, c, labs in w.uncovered],
            "verified_cells": len(w.table), "scope": SCOPE_NOTE}
    text = [f"{w.family}: t={w.t}, horizon {w.horizon}: {w.status}"]
    if w.ok:
        text.append(f"  threshold {w.threshold}, {len(w.generators)} generator cell(s), "
                    f"{len(w.table)} cell(s) accounted for")
    else:
        text += [f"  uncovered in member {u['index']}: {_cell(u['labels'])}" for u in data["uncovered"]]
    text.append(f"scope: {SCOPE_NOTE}")
    return (0 if w.ok else 1), data, text


def cmd_bl(args, field):
    G = _parse_graph(args)
    r = analyse(G)
    I = r.ideal
    gens = [I.label(j) for j in range(len(I))]
    sets = [sorted(s) for s in r.sets]
    data = {"graph": {"n": G.n, "edges": [list(e) for e in G.edges]}, "generators": gens, "sets": sets,
            "linear_quotients": r.linear_quotients, "regular": r.regular, "betti_ideal": list(r.betti),
            "pair_formula_mismatches": r.pair_mismatches,
            "edge_formula_mismatches": [[p, sorted(a), sorted(b)] for p, a, b in r.edge_mismatches]}
    text = [f"generators: {', '.join(gens)}",
            f"linear quotients: {r.linear_quotients}, regular decomposition: {r.regular}"]
    text += [f"  set({g}) = {s}" for g, s in zip(gens, sets)]
    text.append(f"betti of the ideal: {r.betti}")
    if r.edge_mismatches:
        text.append(f"all-edges closed form for set(x_i y_k) disagrees at {len(r.edge_mismatches)} generator(s)")
    ok = r.linear_quotients and r.regular and not r.pair_mismatches
    return (0 if ok else 1), data, text


def cmd_rename(args, field):
    X = complex_from_json(_load_json(args.complex))
    inj = {}
    for part in args.map.split(","):
        a, _, b = part.partition(":")
        if not a.strip().isdigit() or not b.strip().isdigit():
            raise InputError(f"bad map entry {part!r}; use src:dst with 0-based indices")
        inj[int(a)] = int(b)
    if sorted(inj) != list(range(X.n)):
        raise InputError(f"map must cover variables 0..{X.n - 1}")
    Y = rename_variables(X, inj, args.target_n or X.n)
    return 0, complex_to_json(Y), [f"renamed complex over {Y.n} variables, f-vector {f_vector(Y)}"]


COMMANDS = {"build": cmd_build, "betti": cmd_betti, "acyclic": cmd_acyclic, "minimal": cmd_minimal,
            "morphisms": cmd_morphisms, "covering": cmd_covering, "syzygy-witness": cmd_witness,
            "bl": cmd_bl, "rename": cmd_rename}


def _add_family_args(p):
    p.add_argument("--family", choices=list(FAMILY_KINDS) + ["taylor"], help="family kind")
    p.add_argument("--family-spec", help="JSON file with a family description")
    p.add_argument("--vars", type=int, help="variables, pairs (cube) or path length")
    p.add_argument("--degree", type=int, help="generator degree (bounded)")
    p.add_argument("--bound", help="comma separated bound vector (bounded)")
    p.add_argument("--ideal", help="ideal such as '(x,y,z)'")
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--edges", help="edges such as 1-2,2-3")
    p.add_argument("--vertices", type=int, help="vertex count for --edges")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cellres", description="Cellular resolutions of monomial ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals, default) or p<prime>, e.g. p32003")
    common.add_argument("--out", help="write the JSON report to this file")
    common.add_argument("--format", choices=["table", "json"], default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("build", "acyclic", "minimal"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--complex", help="complex JSON file")
        p.add_argument("--arrangement", help="arrangement JSON file")
        p.add_argument("--index", type=int)
        _add_family_args(p)

    p = sub.add_parser("betti", parents=[common])
    p.add_argument("--complex")
    p.add_argument("--arrangement")
    p.add_argument("--index", type=int)
    _add_family_args(p)

    p = sub.add_parser("morphisms", parents=[common])
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--index", type=int, help="target member; source is index-1")
    _add_family_args(p)

    p = sub.add_parser("covering", parents=[common])
    p.add_argument("--max", type=int, help="scan members up to this index")
    p.add_argument("--index", type=int, help="check a single member")
    p.add_argument("--sources", help="comma separated source indices for --index")
    _add_family_args(p)

    p = sub.add_parser("syzygy-witness", parents=[common])
    p.add_argument("--t", default="top", help="syzygy index, or 'top' for the top cells of the horizon member")
    p.add_argument("--horizon", type=int, required=True)
    _add_family_args(p)

    p = sub.add_parser("bl", parents=[common])
    p.add_argument("--graph")
    p.add_argument("--edges")
    p.add_argument("--vertices", type=int)

    p = sub.add_parser("rename", parents=[common])
    p.add_argument("--complex", required=True)
    p.add_argument("--map", required=True, help="0-based src:dst pairs, e.g. 0:1,1:2,2:3")
    p.add_argument("--target-n", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        field = FieldChoice.parse(args.field)
        status, data, text = COMMANDS[args.command](args, field)
    except (InputError, SchemaError, FamilyError, SizeLimitError, SubdivisionError,
            MorphismError, mono.MonomialError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = dumps(data)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    sys.stdout.write(payload if args.format == "json" else _table(text))
    return status


if __name__ == "__main__":
    sys.exit(main())
