"""Multiplication morphisms between labeled complexes and their chain maps."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import monomial as mono
from .complex import EMPTY, Cell, LabeledComplex
from .linalg import QQ, FieldChoice
from .resolution import FreeComplex, free_complex_from_labeled


class MorphismError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MultiplicationMorphism:
    """Cellular map that multiplies every vertex label by ``multiplier``.

    ``cell_map`` sends every non-empty source cell id to a target cell id of
    the same dimension; the empty cell maps to itself implicitly.
    """

    multiplier: tuple
    source: LabeledComplex
    target: LabeledComplex
    cell_map: Mapping[int, int]

    def __call__(self, cell_id: int) -> int:
        return EMPTY if cell_id == EMPTY else self.cell_map[cell_id]

    def image(self, cells=None) -> set:
        keys = self.cell_map if cells is None else cells
        return {self.cell_map[c] for c in keys}


@dataclass
class ChainMap:
    """Homogeneous chain map F_X -> F_Y of degree ``multiplier``.

    ``matrices[i]`` is f_i stored as ``{(target row, source col): coeff}``;
    the monomial of an entry is source degree + multiplier - target degree.
    """

    multiplier: tuple
    source: FreeComplex
    target: FreeComplex
    matrices: list

    def entry_monomial(self, i: int, row: int, col: int) -> tuple:
        s = mono.mul(self.source.modules[i][col], self.multiplier)
        return tuple(a - b for a, b in zip(s, self.target.modules[i][row]))


def induced_label_map(g: MultiplicationMorphism) -> dict:
    return {c.label: mono.mul(g.multiplier, c.label)
            for c in g.source.cells.values() if c.dim == 0}


def _vertex_map(X: LabeledComplex, Y: LabeledComplex, label_of) -> dict | None:
    out = {}
    for v in X.cells_of_dim(0):
        w = Y.vertex_by_label.get(label_of(X.cells[v].label))
        if w is None:
            return None
        out[v] = w
    return out


def extend_vertex_map(X: LabeledComplex, Y: LabeledComplex, vmap: Mapping[int, int]) -> dict | None:
    """Extend a vertex map cell by cell, or None if some image is not a cell.

    A source cell must land on a target cell with exactly the image vertex
    set and the same dimension, and facets must go to facets.
    """
    if len(set(vmap.values())) != len(vmap):
        return None
    cmap = {}
    for cid, c in X.cells.items():
        if cid == EMPTY:
            continue
        img = frozenset(vmap[v] for v in c.vertices)
        t = Y.cell_by_vertices.get(img)
        if t is None or Y.cells[t].dim != c.dim:
            return None
        cmap[cid] = t
    for (c, f) in X.incidence:
        if f == EMPTY:
            continue
        if (cmap[c], cmap[f]) not in Y.incidence:
            return None
    return cmap


def find_multiplication_morphisms(X: LabeledComplex, Y: LabeledComplex) -> list:
    """All multiplication morphisms X -> Y, sorted by multiplier (descending lex)."""
    if X.n != Y.n:
        raise MorphismError(f"complexes live over {X.n} and {Y.n} variables")
    verts = X.cells_of_dim(0)
    if not verts:
        return []
    base = X.cells[verts[0]].label
    candidates = set()
    for w in Y.cells_of_dim(0):
        lab = Y.cells[w].label
        if mono.divides(base, lab):
            candidates.add(mono.quotient(lab, base))
    out = []
    for m in sorted(candidates, key=mono.lex_key):
        vmap = _vertex_map(X, Y, lambda a, m=m: mono.mul(a, m))
        if vmap is None:
            continue
        cmap = extend_vertex_map(X, Y, vmap)
        if cmap is not None:
            out.append(MultiplicationMorphism(m, X, Y, cmap))
    return out


def identity_morphism(X: LabeledComplex) -> MultiplicationMorphism:
    return MultiplicationMorphism(mono.one(X.n), X, X, {c: c for c in X.cells if c != EMPTY})


def compose(g2: MultiplicationMorphism, g1: MultiplicationMorphism) -> MultiplicationMorphism:
    """g2 after g1."""
    if g1.target is not g2.source:
        raise MorphismError("target of the first morphism is not the source of the second")
    cmap = {c: g2.cell_map[t] for c, t in g1.cell_map.items()}
    return MultiplicationMorphism(mono.mul(g1.multiplier, g2.multiplier), g1.source, g2.target, cmap)


# ------------------------------------------------------------ chain maps

def _generator_index(F: FreeComplex) -> list:
    return [{c: j for j, c in enumerate(ids)} for ids in F.cells]


def build_chain_map(g: MultiplicationMorphism, field: FieldChoice = QQ) -> ChainMap:
    """The canonical chain map of ``g``; signs reconcile stored orientations.

    f_0 is multiplication by the multiplier.  A cell's sign is derived from
    its first facet and then checked against all other facets.
    """
    X, Y = g.source, g.target
    FX = free_complex_from_labeled(X, field)
    FY = free_complex_from_labeled(Y, field)
    sign = {EMPTY: 1}
    for d in range(0, X.dim + 1):
        for c in X.cells_of_dim(d):
            facets = X.facets[c]
            f = next(iter(facets))
            sign[c] = facets[f] * sign[f] * Y.incidence[(g(c), g(f))]
    ix, iy = _generator_index(FX), _generator_index(FY)
    mats = []
    for i, ids in enumerate(FX.cells):
        mats.append({(iy[i][g(c)], ix[i][c]): field.coerce(sign[c]) for c in ids})
    f = ChainMap(g.multiplier, FX, FY, mats)
    problems = chain_map_problems(f)
    if problems:
        raise MorphismError("cellular map has no compatible chain map: " + "; ".join(problems[:3]))
    return f


def chain_map_problems(f: ChainMap) -> list:
    """Homogeneity and commutation failures of ``f``."""
    F, G = f.source, f.target
    field = G.field
    out = []
    for i, mat in enumerate(f.matrices):
        for (r, c), v in mat.items():
            if v != 0 and min(f.entry_monomial(i, r, c)) < 0:
                out.append(f"f_{i}: entry ({r},{c}) not homogeneous")
    for i in range(1, min(len(F.modules), len(f.matrices))):
        lhs = _product(G.d(i) if i < len(G.modules) else {}, f.matrices[i], field)
        rhs = _product(f.matrices[i - 1], F.d(i), field)
        keys = set(lhs) | set(rhs)
        bad = sorted(k for k in keys if field.coerce(lhs.get(k, 0) - rhs.get(k, 0)) != 0)
        if bad:
            out.append(f"d'_{i} f_{i} != f_{i - 1} d_{i} at {bad[:4]}")
    return out


def _product(A: Mapping, B: Mapping, field: FieldChoice) -> dict:
    by_row = defaultdict(list)
    for (k, c), v in B.items():
        by_row[k].append((c, v))
    out = defaultdict(lambda: 0)
    for (r, k), u in A.items():
        for c, v in by_row.get(k, ()):
            out[(r, c)] = field.coerce(out[(r, c)] + u * v)
    return {k: v for k, v in out.items() if v != 0}


def is_compatible_pair(g: MultiplicationMorphism, f: ChainMap) -> bool:
    """f_0 is the label map of g, f commutes, and supports follow the cell map."""
    if tuple(f.multiplier) != tuple(g.multiplier):
        return False
    if len(f.matrices) != len(f.source.modules) or not f.matrices:
        return False
    if {k: v for k, v in f.matrices[0].items() if v != 0} != {(0, 0): f.target.field.coerce(1)}:
        return False
    try:
        iy = _generator_index(f.target)
        for i, ids in enumerate(f.source.cells):
            want = {(iy[i][g(c)], j) for j, c in enumerate(ids)}
            have = {k for k, v in f.matrices[i].items() if v != 0}
            if want != have:
                return False
    except (KeyError, TypeError, IndexError):
        return False
    return not chain_map_problems(f)


def zero_chain_map(g: MultiplicationMorphism, field: FieldChoice = QQ) -> ChainMap:
    FX = free_complex_from_labeled(g.source, field)
    FY = free_complex_from_labeled(g.target, field)
    return ChainMap(g.multiplier, FX, FY, [{} for _ in FX.modules])


@dataclass
class SearchResult:
    """Outcome of the bounded compatible-chain-map search."""

    found: ChainMap | None
    reason: str
    nodes: int = 0


def search_compatible_chain_map(X: LabeledComplex, Y: LabeledComplex, vertex_map: Mapping,
                                coefficients: Sequence[int] = (-1, 0, 1),
                                field: FieldChoice = QQ) -> SearchResult:
    """Exhaustively look for a chain map compatible with a cellular map.

    ``vertex_map`` sends source vertex labels (or ids) to target vertex
    labels (or ids).  f_0 must be a single monomial p with p * label(v) equal
    to the image label for every vertex; higher entries are drawn from
    ``coefficients`` with monomials forced by homogeneity, and their support
    must follow the cell map.
    """
    vmap = {}
    for k, v in vertex_map.items():
        src = X.vertex_by_label.get(tuple(k)) if isinstance(k, tuple) else k
        dst = Y.vertex_by_label.get(tuple(v)) if isinstance(v, tuple) else v
        if src is None or dst is None:
            return SearchResult(None, f"vertex {k} or its image {v} is not a vertex")
        vmap[src] = dst
    if set(vmap) != set(X.cells_of_dim(0)):
        return SearchResult(None, "vertex map is not defined on every vertex")
    cmap = extend_vertex_map(X, Y, vmap)
    if cmap is None:
        return SearchResult(None, "vertex map does not extend to a cellular map")
    ratios = set()
    for v, w in vmap.items():
        a, b = X.cells[v].label, Y.cells[w].label
        ratios.add(tuple(q - p for p, q in zip(a, b)))
    if len(ratios) != 1 or min(next(iter(ratios))) < 0:
        return SearchResult(None, f"no monomial f_0 realises the label map (ratios {sorted(ratios)})")
    p = ratios.pop()
    g = MultiplicationMorphism(p, X, Y, cmap)
    FX = free_complex_from_labeled(X, field)
    FY = free_complex_from_labeled(Y, field)
    order = [c for d in range(0, X.dim + 1) for c in X.cells_of_dim(d)]
    coeffs = [field.coerce(c) for c in coefficients]
    one = field.coerce(1)
    nodes = 0

    def ok(c, s, sign):
        # column c of d' f = f d, entries indexed by target facets
        lhs = {h: field.coerce(s * t) for h, t in Y.facets.get(cmap[c], {}).items()}
        rhs = defaultdict(lambda: 0)
        for f, t in X.facets[c].items():
            rhs[cmap.get(f, EMPTY)] = field.coerce(rhs[cmap.get(f, EMPTY)] + t * sign[f])
        keys = set(lhs) | set(rhs)
        return all(field.coerce(lhs.get(k, 0) - rhs.get(k, 0)) == 0 for k in keys)

    def dfs(pos, sign):
        nonlocal nodes
        if pos == len(order):
            return dict(sign)
        c = order[pos]
        for s in coeffs:
            nodes += 1
            if s == 0:
                continue  # support must match the cell map
            if ok(c, s, sign):
                sign[c] = s
                found = dfs(pos + 1, sign)
                if found is not None:
                    return found
                del sign[c]
        return None

    sol = dfs(0, {EMPTY: one})
    if sol is None:
        return SearchResult(None, "no coefficient choice commutes with the differentials", nodes)
    ix, iy = _generator_index(FX), _generator_index(FY)
    mats = []
    for i, ids in enumerate(FX.cells):
        mats.append({(iy[i][g(c)], ix[i][c]): sol[c] for c in ids})
    f = ChainMap(p, FX, FY, mats)
    if not is_compatible_pair(g, f):
        return SearchResult(None, "candidate failed the compatibility check", nodes)
    return SearchResult(f, "found", nodes)


# ------------------------------------------------------------ renamings

def _injection_tuple(injection, n: int) -> tuple:
    if isinstance(injection, Mapping):
        inj = tuple(injection[i] for i in range(n))
    else:
        inj = tuple(injection)
    if len(inj) != n:
        raise MorphismError(f"injection covers {len(inj)} of {n} variables")
    if len(set(inj)) != len(inj):
        raise MorphismError(f"variable map {inj} is not injective")
    return inj


def push_label(label: Sequence[int], injection: Sequence[int], target_n: int) -> tuple:
    out = [0] * target_n
    for i, e in enumerate(label):
        out[injection[i]] += e
    return tuple(out)


def rename_variables(X: LabeledComplex, injection, target_n: int) -> LabeledComplex:
    """Same cells, labels pushed along a variable injection into target_n variables."""
    inj = _injection_tuple(injection, X.n)
    if target_n < X.n or any(not 0 <= j < target_n for j in inj):
        raise MorphismError(f"injection {inj} does not land in {target_n} variables")
    cells = [Cell(c.id, c.dim, c.vertices, push_label(c.label, inj, target_n))
             for c in X.cells.values() if c.id != EMPTY]
    names = None
    if X.variables is not None and target_n == X.n:
        names = tuple(X.variables[inj.index(j)] for j in range(target_n))
    return LabeledComplex.build(target_n, cells, X.incidence, names)


@dataclass(frozen=True)
class RenamingEmbedding:
    injection: tuple
    morphism: MultiplicationMorphism


def find_renaming_embeddings(X: LabeledComplex, Y: LabeledComplex,
                             order_preserving: bool = False) -> list:
    """Variable injections after which X embeds in Y with multiplier 1.

    Injections are first filtered by generator containment: every vertex
    label of X must become a vertex label of Y.
    """
    xs = [X.cells[v].label for v in X.cells_of_dim(0)]
    ys = set(Y.vertex_by_label)
    found = []
    pool = itertools.combinations(range(Y.n), X.n) if order_preserving else itertools.permutations(range(Y.n), X.n)
    for inj in pool:
        if not all(push_label(a, inj, Y.n) in ys for a in xs):
            continue
        R = rename_variables(X, inj, Y.n)
        for g in find_multiplication_morphisms(R, Y):
            if not any(g.multiplier):
                found.append(RenamingEmbedding(tuple(inj), g))
    return found


def containment_injections(X: LabeledComplex, Y: LabeledComplex) -> list:
    """Injections under which every vertex label of X becomes one of Y."""
    xs = [X.cells[v].label for v in X.cells_of_dim(0)]
    ys = set(Y.vertex_by_label)
    return [inj for inj in itertools.permutations(range(Y.n), X.n)
            if all(push_label(a, inj, Y.n) in ys for a in xs)]
