"""Cellular free complexes, acyclicity, minimalization and Betti numbers."""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from . import monomial as mono
from .complex import EMPTY, Cell, LabeledComplex, reduced_homology_ranks, restrict_leq
from .linalg import QQ, FieldChoice

TAYLOR_LIMIT = 15   # largest generator count for which a Taylor complex is built
BETTI_LIMIT = 12    # largest generator count for the Taylor Betti oracle


class SizeLimitError(ValueError):
    pass


@dataclass
class FreeComplex:
    """A complex of graded free modules S(-a) with monomial-matrix differentials.

    ``modules[i]`` lists generator degrees of F_i; ``differentials[i - 1]``
    is the map F_i -> F_{i-1} stored sparsely as ``{(row, col): coeff}``.
    The monomial of an entry is forced by homogeneity: column degree minus
    row degree.  ``cells[i]`` optionally records the cell behind each
    generator.
    """

    n: int
    modules: list
    differentials: list
    field: FieldChoice = QQ
    cells: list | None = None

    def d(self, i: int) -> dict:
        return self.differentials[i - 1]

    def ranks(self) -> tuple:
        return tuple(len(m) for m in self.modules)

    def length(self) -> int:
        return len(self.modules) - 1

    def entry_monomial(self, i: int, row: int, col: int) -> tuple:
        return tuple(c - r for c, r in zip(self.modules[i][col], self.modules[i - 1][row]))

    def dense(self, i: int) -> list:
        """Matrix of d_i as nested lists of (coeff, monomial) or None."""
        out = [[None] * len(self.modules[i]) for _ in self.modules[i - 1]]
        for (r, c), v in self.d(i).items():
            out[r][c] = (v, self.entry_monomial(i, r, c))
        return out


def free_complex_from_labeled(X: LabeledComplex, field: FieldChoice = QQ) -> FreeComplex:
    top = X.dim
    cells = [X.cells_of_dim(d) for d in range(-1, top + 1)]
    modules = [[X.cells[c].label for c in ids] for ids in cells]
    index = [{c: j for j, c in enumerate(ids)} for ids in cells]
    diffs = []
    for i in range(1, len(cells)):
        mat = {}
        for c in cells[i]:
            for f, s in X.facets.get(c, {}).items():
                mat[(index[i - 1][f], index[i][c])] = field.coerce(s)
        diffs.append(mat)
    return FreeComplex(X.n, modules, diffs, field, cells)


def check_free_complex(F: FreeComplex) -> list:
    problems = []
    for i in range(1, len(F.modules)):
        for (r, c), v in F.d(i).items():
            if not (0 <= r < len(F.modules[i - 1]) and 0 <= c < len(F.modules[i])):
                problems.append(f"d_{i}: entry ({r},{c}) out of range")
            elif v != 0 and not mono.divides(F.modules[i - 1][r], F.modules[i][c]):
                problems.append(f"d_{i}: entry ({r},{c}) is not homogeneous")
    for i in range(1, len(F.modules) - 1):
        by_row = defaultdict(dict)
        for (r, k), v in F.d(i).items():
            by_row[k][r] = v
        acc = defaultdict(lambda: 0)
        for (k, c), v in F.d(i + 1).items():
            for r, u in by_row.get(k, {}).items():
                acc[(r, c)] = F.field.coerce(acc[(r, c)] + u * v)
        bad = sorted(key for key, v in acc.items() if v != 0)
        if bad:
            problems.append(f"d_{i} d_{i + 1} != 0 at {bad[:5]}")
    return problems


def is_minimal(F: FreeComplex) -> bool:
    for i in range(1, len(F.modules)):
        for (r, c), v in F.d(i).items():
            if v != 0 and F.modules[i][c] == F.modules[i - 1][r]:
                return False
    return True


class _Sparse:
    def __init__(self, entries: dict):
        self.rows = defaultdict(dict)
        self.cols = defaultdict(dict)
        for (r, c), v in entries.items():
            if v != 0:
                self.rows[r][c] = v
                self.cols[c][r] = v

    def set(self, r, c, v):
        if v == 0:
            self.rows[r].pop(c, None)
            self.cols[c].pop(r, None)
        else:
            self.rows[r][c] = v
            self.cols[c][r] = v

    def drop_row(self, r):
        for c in self.rows.pop(r, {}):
            self.cols[c].pop(r, None)

    def drop_col(self, c):
        for r in self.cols.pop(c, {}):
            self.rows[r].pop(c, None)


def minimalize(F: FreeComplex, field: FieldChoice | None = None) -> FreeComplex:
    """Cancel unit entries until none are left.

    Always cancels the first unit entry in row-major order of the
    lowest-index differential that still has one.
    """
    field = field or F.field
    mats = [_Sparse({k: field.coerce(v) for k, v in F.d(i).items()}) for i in range(1, len(F.modules))]
    alive = [set(range(len(m))) for m in F.modules]
    degs = F.modules

    def first_unit(i: int):
        M = mats[i - 1]
        for r in sorted(M.rows):
            row = M.rows[r]
            for c in sorted(row):
                if degs[i][c] == degs[i - 1][r]:
                    return r, c
        return None

    for i in range(1, len(F.modules)):
        while True:
            hit = first_unit(i)
            if hit is None:
                break
            r, c = hit
            M = mats[i - 1]
            u_inv = field.inv(M.rows[r][c])
            col_c = {a: v for a, v in M.cols[c].items() if a != r}
            row_r = {b: v for b, v in M.rows[r].items() if b != c}
            for a, x in col_c.items():
                scale = x * u_inv
                for b, y in row_r.items():
                    cur = M.rows[a].get(b, 0)
                    M.set(a, b, field.coerce(cur - scale * y))
            M.drop_row(r)
            M.drop_col(c)
            if i < len(mats):
                mats[i].drop_row(c)
            if i >= 2:
                mats[i - 2].drop_col(r)
            alive[i].discard(c)
            alive[i - 1].discard(r)

    order = [sorted(a) for a in alive]
    while len(order) > 1 and not order[-1]:
        order.pop()
    new_index = [{old: j for j, old in enumerate(o)} for o in order]
    modules = [[degs[i][g] for g in o] for i, o in enumerate(order)]
    diffs = []
    for i in range(1, len(order)):
        mat = {}
        for r, row in mats[i - 1].rows.items():
            for c, v in row.items():
                if v != 0:
                    mat[(new_index[i - 1][r], new_index[i][c])] = v
        diffs.append(mat)
    cells = None
    if F.cells is not None:
        cells = [[F.cells[i][g] for g in o] for i, o in enumerate(order)]
    return FreeComplex(F.n, modules, diffs, field, cells)


def betti_of_complex(F: FreeComplex) -> tuple:
    ranks = list(minimalize(F).ranks())
    while len(ranks) > 1 and ranks[-1] == 0:
        ranks.pop()
    return tuple(ranks)


# ------------------------------------------------------------ acyclicity

def lcm_lattice(labels: Sequence[tuple]) -> list:
    """All lcms of non-empty subsets of ``labels``."""
    base = sorted(set(labels), key=mono.lex_key)
    seen = set(base)
    frontier = list(base)
    while frontier:
        fresh = []
        for a in frontier:
            for v in base:
                j = mono.lcm(a, v)
                if j not in seen:
                    seen.add(j)
                    fresh.append(j)
        frontier = fresh
    return sorted(seen, key=lambda b: (sum(b), mono.lex_key(b)))


def acyclicity_failures(X: LabeledComplex, field: FieldChoice = QQ, first_only: bool = False) -> list:
    """Degrees b in the lcm lattice where X restricted to b has homology."""
    labels = [X.cells[v].label for v in X.cells_of_dim(0)]
    failures = []
    checked: dict = {}
    for b in lcm_lattice(labels):
        keep = frozenset(cid for cid, c in X.cells.items() if mono.divides(c.label, b))
        if keep not in checked:
            checked[keep] = reduced_homology_ranks(restrict_leq(X, b), field)
        ranks = checked[keep]
        if any(ranks):
            failures.append((b, ranks))
            if first_only:
                break
    return failures


def is_resolution(X: LabeledComplex, field: FieldChoice = QQ) -> bool:
    return not acyclicity_failures(X, field, first_only=True)


# ------------------------------------------------------------ Taylor

def taylor_complex(ideal: mono.MonomialIdeal, limit: int = TAYLOR_LIMIT,
                   variables: Sequence[str] | None = None) -> LabeledComplex:
    gens = list(ideal.generators)
    g = len(gens)
    if g == 0:
        raise ValueError("the zero ideal has no Taylor complex")
    if g > limit:
        raise SizeLimitError(f"Taylor complex on {g} generators exceeds the limit {limit}")
    subsets = [s for k in range(1, g + 1) for s in itertools.combinations(range(g), k)]
    ids = {s: j for j, s in enumerate(subsets)}
    cells = []
    incidence = {}
    for s in subsets:
        label = gens[s[0]]
        for v in s[1:]:
            label = mono.lcm(label, gens[v])
        cells.append(Cell(ids[s], len(s) - 1, frozenset(ids[(v,)] for v in s), label))
        if len(s) > 1:
            for pos in range(len(s)):
                incidence[(ids[s], ids[s[:pos] + s[pos + 1:]])] = -1 if pos % 2 else 1
    return LabeledComplex.build(ideal.n, cells, incidence, variables)


def minimal_resolution(ideal: mono.MonomialIdeal, field: FieldChoice = QQ) -> FreeComplex:
    if ideal.is_zero:
        return FreeComplex(ideal.n, [[mono.one(ideal.n)]], [], field, None)
    if len(ideal) > BETTI_LIMIT:
        raise SizeLimitError(f"{len(ideal)} generators exceed the Taylor oracle limit {BETTI_LIMIT}")
    return minimalize(free_complex_from_labeled(taylor_complex(ideal), field), field)


def betti(ideal: mono.MonomialIdeal, field: FieldChoice = QQ) -> tuple:
    """Total Betti numbers of S/I, starting with beta_0 = 1."""
    return minimal_resolution(ideal, field).ranks()


def syzygy_generators(ideal: mono.MonomialIdeal, t: int, field: FieldChoice = QQ) -> list:
    """Multidegrees of the generators of F_t in the minimal resolution of S/I."""
    F = minimal_resolution(ideal, field)
    if t < 0 or t >= len(F.modules):
        return []
    return sorted(F.modules[t], key=lambda a: (sum(a), mono.lex_key(a)))
