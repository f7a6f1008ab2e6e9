"""Polyhedral subdivisions of lattice polytopes cut by integer hyperplanes.

The polytope is conv(vertex_points).  Each family is a linear functional f
and cuts along every level set f = j, j integer.  Closed cells of the
arrangement are enumerated by choosing, per family, either an equality
f = j or a closed slab j <= f <= j + 1; the lattice points satisfying the
choice span a cell of the subdivision.  The faces of those cells (computed
exactly from the lattice points) are the cells of the complex, identified by
vertex sets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import monomial as mono
from .complex import EMPTY, Cell, LabeledComplex, euler_characteristic


class SubdivisionError(ValueError):
    """The hyperplanes do not induce a subdivision supported on the given points."""


@dataclass(frozen=True)
class HyperplaneFamily:
    functional: tuple

    def __post_init__(self):
        object.__setattr__(self, "functional", tuple(int(c) for c in self.functional))
        if not any(self.functional):
            raise ValueError("functional must be non-zero")

    def __call__(self, point: Sequence[int]) -> int:
        return sum(c * p for c, p in zip(self.functional, point))


@dataclass(frozen=True)
class ArrangementSpec:
    vertex_points: tuple
    families: tuple = field(default=())

    def __post_init__(self):
        pts = sorted({tuple(p) for p in self.vertex_points}, key=mono.lex_key)
        if not pts:
            raise ValueError("vertex_points must be non-empty")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("vertex points have different lengths")
        fams = []
        for f in self.families:
            f = f if isinstance(f, HyperplaneFamily) else HyperplaneFamily(tuple(f))
            if len(f.functional) != n:
                raise ValueError("functional length does not match points")
            if f not in fams:
                fams.append(f)
        object.__setattr__(self, "vertex_points", tuple(pts))
        object.__setattr__(self, "families", tuple(fams))

    @property
    def n(self) -> int:
        return len(self.vertex_points[0])


def coordinate_families(n: int) -> list:
    return [HyperplaneFamily(mono.variable(i, n)) for i in range(n)]


# ------------------------------------------------------------ exact helpers

def _det(m: list) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    a = [list(r) for r in m]
    k = len(a)
    if k == 0:
        return 1
    sign, prev = 1, 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _dot(p, q):
    return sum(a * b for a, b in zip(p, q))


def _independent_rows(vectors: Iterable[tuple]) -> list:
    """Greedy lexicographic choice of linearly independent vectors."""
    basis: list = []
    echelon: list = []  # (pivot, row) with Fraction-free integer rows
    for v in vectors:
        row = list(v)
        for piv, e in echelon:
            if row[piv]:
                f, g = row[piv], e[piv]
                row = [g * x - f * y for x, y in zip(row, e)]
        nz = next((i for i, x in enumerate(row) if x), None)
        if nz is None:
            continue
        echelon.append((nz, row))
        basis.append(tuple(v))
    return basis


def affine_dim(points: Sequence[tuple]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return len(_independent_rows(_sub(p, p0) for p in points[1:]))


# ------------------------------------------------------------ face lattice

class _FaceLattice:
    def __init__(self, points: Sequence[tuple]):
        self.points = points
        self.facets: dict = {}
        self.dims: dict = {}

    def dim(self, s: frozenset) -> int:
        if s not in self.dims:
            self.dims[s] = affine_dim([self.points[i] for i in sorted(s)])
        return self.dims[s]

    def facets_of(self, s: frozenset) -> list:
        if s in self.facets:
            return self.facets[s]
        idx = sorted(s)
        pts = [self.points[i] for i in idx]
        d = self.dim(s)
        out = []
        if d == 0:
            if len(idx) > 1:
                raise SubdivisionError(f"repeated points {pts}")
            out = [frozenset()]
        else:
            p0 = pts[0]
            span = _independent_rows(_sub(p, p0) for p in pts[1:])
            seen = set()
            for combo in itertools.combinations(range(len(idx)), d):
                q0 = pts[combo[0]]
                rows = [[_dot(b, _sub(pts[c], q0)) for b in span] for c in combo[1:]]
                # cofactor vector spans the kernel when rows have rank d-1
                alpha = []
                for k in range(d):
                    minor = [r[:k] + r[k + 1:] for r in rows]
                    alpha.append((-1) ** k * _det(minor))
                if not any(alpha):
                    continue
                normal = [sum(a * b[j] for a, b in zip(alpha, span)) for j in range(len(p0))]
                vals = [_dot(normal, _sub(p, q0)) for p in pts]
                if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
                    face = frozenset(i for i, v in zip(idx, vals) if v == 0)
                    if face not in seen:
                        seen.add(face)
                        out.append(face)
            for face in out:
                if self.dim(face) != d - 1:
                    raise SubdivisionError(f"degenerate facet {sorted(face)}")
        self.facets[s] = out
        return out

    def all_faces(self, s: frozenset, into: set) -> None:
        stack = [s]
        while stack:
            f = stack.pop()
            if f in into or not f:
                continue
            into.add(f)
            stack.extend(self.facets_of(f))


def _closed_cells(points: Sequence[tuple], families: Sequence[HyperplaneFamily]) -> set:
    values = [[f(p) for p in points] for f in families]
    leaves: set = set()

    def recurse(k: int, current: tuple) -> None:
        if k == len(families):
            leaves.add(frozenset(current))
            return
        vals = values[k]
        present = sorted({vals[i] for i in current})
        lo, hi = present[0], present[-1]
        for j in range(lo, hi + 1):
            eq = tuple(i for i in current if vals[i] == j)
            if eq:
                recurse(k + 1, eq)
            if j < hi:
                slab = tuple(i for i in current if j <= vals[i] <= j + 1)
                if len(slab) > len(eq):
                    recurse(k + 1, slab)

    recurse(0, tuple(range(len(points))))
    return leaves


# ------------------------------------------------------------ orientation

def _orientation_basis(vertex_points: Sequence[tuple]) -> list:
    p0 = vertex_points[0]
    chosen: list = []
    for p in vertex_points[1:]:
        cand = chosen + [_sub(p, p0)]
        if len(_independent_rows(cand)) == len(cand):
            chosen = cand
    return chosen


def _coordinate_chart(basis: Sequence[tuple]) -> list:
    """Coordinates on which the span of ``basis`` projects isomorphically."""
    n = len(basis[0])
    cols: list = []
    for j in range(n):
        cand = cols + [j]
        sub = [[b[c] for c in cand] for b in basis]
        # rank of the projected basis on the candidate columns
        if len(_independent_rows([tuple(r[i] for r in sub) for i in range(len(cand))])) == len(cand):
            cols = cand
        if len(cols) == len(basis):
            break
    if len(cols) != len(basis):
        raise SubdivisionError("orientation basis is degenerate")
    return cols


def incidence_sign(cell_points: Sequence[tuple], facet_points: Sequence[tuple]) -> int:
    """Sign of a facet in a cell, both given as vertex lists sorted by label.

    Cells are oriented by the greedy lexicographic affine basis of their
    sorted vertices.  The sign compares (facet basis, outward vector) with
    the cell basis.
    """
    if not facet_points:
        return 1
    cell_basis = _orientation_basis(cell_points)
    facet_basis = _orientation_basis(facet_points) if len(facet_points) > 1 else []
    g0 = facet_points[0]
    facet_set = set(facet_points)
    apex = next(p for p in cell_points if p not in facet_set)
    outward = _sub(g0, apex)
    frame = facet_basis + [outward]
    if len(frame) != len(cell_basis):
        raise SubdivisionError("facet is not of codimension one")
    cols = _coordinate_chart(cell_basis)
    d_frame = _det([[v[c] for c in cols] for v in frame])
    d_cell = _det([[v[c] for c in cols] for v in cell_basis])
    if d_frame == 0 or d_cell == 0:
        raise SubdivisionError("degenerate orientation frame")
    return 1 if (d_frame > 0) == (d_cell > 0) else -1


# ------------------------------------------------------------ builder

def build_arrangement_complex(spec: ArrangementSpec, variables: Sequence[str] | None = None) -> LabeledComplex:
    points = list(spec.vertex_points)
    lattice = _FaceLattice(points)
    leaves = _closed_cells(points, spec.families)
    faces: set = set()
    for leaf in sorted(leaves, key=lambda s: (-len(s), sorted(s))):
        lattice.all_faces(leaf, faces)
    for f in faces:
        if lattice.dim(f) < 1:
            continue
        on_boundary = set().union(*lattice.facets_of(f))
        inner = f - on_boundary
        if inner:
            raise SubdivisionError(
                f"points {[points[i] for i in sorted(inner)]} lie inside the cell "
                f"{[points[i] for i in sorted(f)]}")
    missing = [points[i] for i in range(len(points)) if frozenset({i}) not in faces]
    if missing:
        raise SubdivisionError(f"points that are not vertices of the subdivision: {missing}")

    ordered = sorted(faces, key=lambda s: (lattice.dim(s), sorted(s)))
    # vertices keep their point index; higher cells follow in order
    ids = {}
    next_id = len(points)
    for f in ordered:
        if len(f) == 1:
            ids[f] = next(iter(f))
        else:
            ids[f] = next_id
            next_id += 1
    cells = []
    for f in ordered:
        label = mono.lcm_all((points[i] for i in f), spec.n)
        cells.append(Cell(ids[f], lattice.dim(f), frozenset(ids[frozenset({i})] for i in f), label))

    incidence = {}
    for f in ordered:
        if lattice.dim(f) < 1:
            continue
        cell_pts = [points[i] for i in sorted(f)]
        for g in lattice.facets_of(f):
            facet_pts = [points[i] for i in sorted(g)]
            incidence[(ids[f], ids[g])] = incidence_sign(cell_pts, facet_pts)
    X = LabeledComplex.build(spec.n, cells, incidence, variables)
    if euler_characteristic(X) != 1:
        raise SubdivisionError("cells do not form a subdivision of a polytope (Euler characteristic != 1)")
    return X
