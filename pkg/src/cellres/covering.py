"""Covering checks between family members and finite-generation witnesses.

Everything here is evidence over a finite window of indices.  A covering
threshold found up to some horizon says nothing about larger indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import monomial as mono
from .families import Family, FamilyMap

SCOPE_NOTE = ("finite-horizon evidence: indices beyond the scanned window are not checked; "
              "finite generation of the syzygy representation additionally presumes a "
              "noetherian representation category")


@dataclass(frozen=True)
class CoverHit:
    source: int
    cell: int
    multiplier: tuple
    injection: tuple | None = None


@dataclass
class CoveringReport:
    family: str
    target: int
    sources: tuple
    dims: tuple
    assignment: dict  # target cell id -> CoverHit or None
    labels: dict      # target cell id -> sorted vertex labels

    @property
    def covered(self) -> bool:
        return all(hit is not None for hit in self.assignment.values())

    def uncovered(self) -> list:
        return [c for c, hit in self.assignment.items() if hit is None]

    def uncovered_labels(self) -> list:
        return [self.labels[c] for c in self.uncovered()]


def _image_index(family: Family, j: int, i: int, d: int) -> list:
    """(map, {image vertex-label set: source cell id}) for maps j -> i."""
    X = family.complex(j)
    cells = X.cells_of_dim(d)
    base = [(c, [X.cells[v].label for v in X.cells[c].vertices]) for c in cells]
    out = []
    for f in family.maps(j, i):
        table = {}
        for c, labs in base:
            table.setdefault(frozenset(f.apply(a) for a in labs), c)
        out.append((f, table))
    return out


def d_covering(family: Family, i: int, sources: Iterable[int], d: int | Sequence[int]) -> CoveringReport:
    """Which d-cells of member i are images of d-cells of the source members.

    Sources are tried from the highest index down; within a source, maps are
    tried in the family's order.  The first hit is recorded.
    """
    dims = (d,) if isinstance(d, int) else tuple(d)
    srcs = tuple(sorted({j for j in sources if family.start <= j < i}, reverse=True))
    Y = family.complex(i)
    assignment, labels = {}, {}
    for dd in dims:
        indexes = [(j, _image_index(family, j, i, dd)) for j in srcs]
        for c in Y.cells_of_dim(dd):
            key = frozenset(Y.cells[v].label for v in Y.cells[c].vertices)
            labels[c] = sorted(key, key=mono.lex_key)
            hit = None
            for j, idx in indexes:
                for f, table in idx:
                    s = table.get(key)
                    if s is not None:
                        hit = CoverHit(j, s, f.multiplier, f.injection)
                        break
                if hit:
                    break
            assignment[c] = hit
    return CoveringReport(family.describe(), i, srcs, dims, assignment, labels)


def full_covering(family: Family, i: int, sources: Iterable[int]) -> CoveringReport:
    return d_covering(family, i, sources, tuple(range(0, family.complex(i).dim + 1)))


@dataclass
class HorizonReport:
    family: str
    max_index: int
    threshold: int | None
    reports: dict           # index -> CoveringReport
    reference: int | None = None
    note: str = SCOPE_NOTE

    @property
    def discrepancy(self) -> bool:
        return self.reference is not None and self.threshold != self.reference

    def covered(self, i: int) -> bool:
        return self.reports[i].covered


def _threshold(flags: dict, top: int) -> int | None:
    best = None
    for i in sorted(flags, reverse=True):
        if not flags[i]:
            break
        best = i
    return best if best is not None and top in flags and flags[top] else None


def reference_threshold(family: Family) -> int | None:
    """Expected threshold n - 1 for the maximal family, None for other kinds."""
    if family.kind == "maximal":
        return family.params["n"] - 1
    return None


def covering_horizon(family: Family, max_index: int) -> HorizonReport:
    """First index i0 such that every member in [i0, max_index] is covered by
    the members below it; ``threshold`` is None when member max_index is not."""
    reports = {}
    for i in range(family.start, max_index + 1):
        reports[i] = full_covering(family, i, range(family.start, i))
    flags = {i: r.covered for i, r in reports.items()}
    return HorizonReport(family.describe(), max_index, _threshold(flags, max_index), reports,
                         reference_threshold(family))


@dataclass
class FGWitness:
    family: str
    t: int
    horizon: int
    threshold: int | None
    generators: list        # (index, cell id)
    table: dict             # (index, cell id) -> (generator index, generator cell, multiplier, injection)
    uncovered: list         # (index, cell id, labels)
    note: str = SCOPE_NOTE

    @property
    def ok(self) -> bool:
        return self.threshold is not None and not self.uncovered

    @property
    def status(self) -> str:
        return "OK" if self.ok else "FAILED"


def syzygy_fg_witness(family: Family, t: int, horizon: int) -> FGWitness:
    """Finite generation witness for the t-th syzygy representation.

    Generators are all (t-1)-cells of the members up to and including the
    (t-1)-covering threshold.  Every (t-1)-cell of a later member up to the
    horizon is then matched to a generator through a composite map.
    """
    if t < 1:
        raise ValueError("t must be positive")
    d = t - 1
    reports = {i: d_covering(family, i, range(family.start, i), d)
               for i in range(family.start, horizon + 1)}
    flags = {i: r.covered for i, r in reports.items()}
    threshold = _threshold(flags, horizon)
    if threshold is None:
        missing = [(i, c, r.labels[c]) for i, r in reports.items() for c in r.uncovered()]
        return FGWitness(family.describe(), t, horizon, None, [], {}, missing)
    gen_idx = range(family.start, threshold + 1)
    generators = [(j, c) for j in gen_idx for c in family.complex(j).cells_of_dim(d)]
    table = {g: (g[0], g[1], mono.one(family.complex(g[0]).n), None) for g in generators}
    missing = []
    for i in range(threshold + 1, horizon + 1):
        rep = d_covering(family, i, gen_idx, d)
        for c, hit in rep.assignment.items():
            if hit is None:
                missing.append((i, c, rep.labels[c]))
            else:
                table[(i, c)] = (hit.source, hit.cell, hit.multiplier, hit.injection)
    return FGWitness(family.describe(), t, horizon, threshold, generators, table, missing)


def top_t(family: Family, horizon: int) -> int:
    """The t whose (t-1)-cells are the top cells of member ``horizon``."""
    return family.complex(horizon).dim + 1
