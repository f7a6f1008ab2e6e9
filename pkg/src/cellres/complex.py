"""Labelled regular CW complexes with signed incidence.

A complex stores its cells by integer id.  The empty cell is always present
with id ``EMPTY`` (-1), dimension -1 and label ``(0,...,0)``; vertices are
attached to it with sign +1, which turns the cellular chain complex into the
augmented one.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import monomial as mono
from .linalg import QQ, FieldChoice, rank

EMPTY = -1


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    vertices: frozenset
    label: tuple


@dataclass(frozen=True, eq=False)
class LabeledComplex:
    n: int
    cells: Mapping[int, Cell]
    incidence: Mapping[tuple, int]  # (cell id, facet id) -> +1 / -1
    variables: tuple | None = None

    @classmethod
    def build(cls, n: int, cells: Iterable[Cell], incidence: Mapping[tuple, int],
              variables: Sequence[str] | None = None) -> "LabeledComplex":
        table = {EMPTY: Cell(EMPTY, -1, frozenset(), mono.one(n))}
        for c in cells:
            if c.id == EMPTY:
                continue
            table[c.id] = c
        inc = dict(incidence)
        for c in table.values():
            if c.dim == 0:
                inc.setdefault((c.id, EMPTY), 1)
        ordered = dict(sorted(table.items()))
        return cls(n, ordered, inc, tuple(variables) if variables else None)

    # ------------------------------------------------------------ queries
    @cached_property
    def facets(self) -> dict:
        out = defaultdict(dict)
        for (c, f), s in self.incidence.items():
            out[c][f] = s
        return {c: dict(sorted(v.items())) for c, v in out.items()}

    @cached_property
    def by_dim(self) -> dict:
        out = defaultdict(list)
        for c in self.cells.values():
            out[c.dim].append(c.id)
        return dict(out)

    @cached_property
    def vertex_by_label(self) -> dict:
        return {c.label: c.id for c in self.cells.values() if c.dim == 0}

    @cached_property
    def cell_by_vertices(self) -> dict:
        return {c.vertices: c.id for c in self.cells.values()}

    @property
    def dim(self) -> int:
        return max(self.by_dim)

    def cells_of_dim(self, d: int) -> list:
        return self.by_dim.get(d, [])

    def vertex_labels(self, cell_id: int) -> list:
        return sorted((self.cells[v].label for v in self.cells[cell_id].vertices), key=mono.lex_key)

    @property
    def names(self) -> tuple:
        return self.variables or mono.default_names(self.n)

    def top_label(self) -> tuple:
        return mono.lcm_all((c.label for c in self.cells.values()), self.n)

    def __len__(self) -> int:
        return len(self.cells) - 1

    def boundary_rows(self, d: int) -> list:
        """Rows of the d-th boundary matrix indexed by (d-1)-cells."""
        rows = defaultdict(dict)
        col_of = {cid: j for j, cid in enumerate(self.cells_of_dim(d))}
        for cid in self.cells_of_dim(d):
            for f, s in self.facets.get(cid, {}).items():
                rows[f][col_of[cid]] = s
        return [rows[f] for f in self.cells_of_dim(d - 1) if f in rows]


def f_vector(X: LabeledComplex) -> tuple:
    top = X.dim
    return tuple(len(X.cells_of_dim(d)) for d in range(0, top + 1))


def validate(X: LabeledComplex) -> list:
    """Return human-readable diagnostics; empty means the complex is valid."""
    problems = []
    for c in X.cells.values():
        if len(c.label) != X.n:
            problems.append(f"cell {c.id}: label length {len(c.label)} != {X.n}")
            continue
        if c.id == EMPTY:
            continue
        if c.dim == 0:
            if c.vertices != frozenset({c.id}):
                problems.append(f"vertex {c.id}: vertex set must be itself")
            continue
        missing = [v for v in c.vertices if v not in X.cells or X.cells[v].dim != 0]
        if missing:
            problems.append(f"cell {c.id}: unknown vertices {sorted(missing)}")
            continue
        expected = mono.lcm_all((X.cells[v].label for v in c.vertices), X.n)
        if expected != c.label:
            problems.append(f"cell {c.id}: label {c.label} != lcm of vertices {expected}")
    seen = {}
    for c in X.cells.values():
        key = (c.dim, c.vertices)
        if key in seen:
            problems.append(f"cells {seen[key]} and {c.id} share dimension and vertex set")
        seen[key] = c.id
    for (cid, fid), s in X.incidence.items():
        if cid not in X.cells or fid not in X.cells:
            problems.append(f"incidence ({cid},{fid}) refers to unknown cells")
            continue
        c, f = X.cells[cid], X.cells[fid]
        if s not in (1, -1):
            problems.append(f"incidence ({cid},{fid}): sign {s} not +-1")
        if f.dim != c.dim - 1:
            problems.append(f"incidence ({cid},{fid}): facet dimension {f.dim} != {c.dim - 1}")
        if not f.vertices <= c.vertices:
            problems.append(f"incidence ({cid},{fid}): facet vertices not a subset")
    if problems:
        return problems
    for c in X.cells.values():
        if c.dim >= 1 and not X.facets.get(c.id):
            problems.append(f"cell {c.id}: no facets")
    # boundary of boundary over the integers
    for cid, fs in X.facets.items():
        acc = defaultdict(int)
        for g, s in fs.items():
            for h, t in X.facets.get(g, {}).items():
                acc[h] += s * t
        bad = sorted(h for h, v in acc.items() if v != 0)
        if bad:
            problems.append(f"boundary of boundary nonzero on cell {cid} at faces {bad}")
    return problems


def restrict_leq(X: LabeledComplex, b: Sequence[int]) -> LabeledComplex:
    """Subcomplex of cells whose label divides ``b``; cell ids are kept."""
    if len(b) != X.n:
        raise mono.MonomialError(f"bound has length {len(b)}, expected {X.n}")
    keep = {cid for cid, c in X.cells.items() if mono.divides(c.label, b)}
    return subcomplex(X, keep)


def subcomplex(X: LabeledComplex, keep: Iterable[int]) -> LabeledComplex:
    keep = set(keep) | {EMPTY}
    cells = [X.cells[c] for c in sorted(keep)]
    inc = {k: s for k, s in X.incidence.items() if k[0] in keep and k[1] in keep}
    return LabeledComplex.build(X.n, cells, inc, X.variables)


def full_subcomplex(X: LabeledComplex, vertex_ids: Iterable[int]) -> LabeledComplex:
    """Cells all of whose vertices lie in ``vertex_ids``."""
    allowed = set(vertex_ids)
    keep = [cid for cid, c in X.cells.items() if c.vertices <= allowed]
    return subcomplex(X, keep)


def reduced_homology_ranks(X: LabeledComplex, field: FieldChoice = QQ) -> tuple:
    """Reduced homology ranks, entry k is the rank in degree k - 1."""
    top = max(X.dim, -1)
    ranks_of = {d: rank(X.boundary_rows(d), field) for d in range(0, top + 2)}
    out = []
    for d in range(-1, top + 1):
        count = len(X.cells_of_dim(d))
        out.append(count - ranks_of.get(d, 0) - ranks_of.get(d + 1, 0))
    return tuple(out)


def is_acyclic(X: LabeledComplex, field: FieldChoice = QQ) -> bool:
    return not any(reduced_homology_ranks(X, field))


def euler_characteristic(X: LabeledComplex) -> int:
    return sum((-1) ** d * k for d, k in enumerate(f_vector(X)))
