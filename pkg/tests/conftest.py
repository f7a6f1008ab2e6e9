from __future__ import annotations

import sys

import pytest

from cellres import monomial as mono
from cellres.complex import Cell, LabeledComplex


def hand_complex(n, vertex_labels, edges, two_cells=(), names=None):
    """Complex from vertex labels, edges (vertex pairs) and 2-cells (edge cycles).

    Edges are oriented from the first to the second vertex; a 2-cell is given
    as a list of (edge index, sign) around its boundary.
    """
    cells = []
    inc = {}
    for i, a in enumerate(vertex_labels):
        cells.append(Cell(i, 0, frozenset({i}), tuple(a)))
    base = len(vertex_labels)
    for k, (u, v) in enumerate(edges):
        cid = base + k
        lab = mono.lcm(vertex_labels[u], vertex_labels[v])
        cells.append(Cell(cid, 1, frozenset({u, v}), lab))
        inc[(cid, v)] = 1
        inc[(cid, u)] = -1
    top = base + len(edges)
    for k, boundary in enumerate(two_cells):
        cid = top + k
        verts = frozenset().union(*(edges[e] for e, _ in boundary))
        lab = mono.lcm_all((vertex_labels[v] for v in verts), n)
        cells.append(Cell(cid, 2, verts, lab))
        for e, s in boundary:
            inc[(cid, base + e)] = s
    return LabeledComplex.build(n, cells, inc, names)


XY, YZ, ZW, XW = (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)


@pytest.fixture
def path_p4_complex():
    """Minimal complex of (xy,yz,zw): three vertices on a line."""
    return hand_complex(4, [XY, YZ, ZW], [(0, 1), (1, 2)])


@pytest.fixture
def square_boundary():
    """Four vertices xz, yz, yw, xw on a circle, no 2-cell."""
    labels = [(1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1)]
    return hand_complex(4, labels, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def filled_square():
    labels = [(1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1), (1, 0, 0, 1)]
    return hand_complex(4, labels, [(0, 1), (1, 2), (2, 3), (3, 0)], [[(0, 1), (1, 1), (2, 1), (3, 1)]])


def columns_as_patterns(row_labels, matrix):
    """Each column of a displayed monomial matrix as {(row label, entry monomial)}."""
    cols = []
    for c in range(len(matrix[0])):
        cols.append(frozenset((row_labels[r], matrix[r][c]) for r in range(len(matrix)) if matrix[r][c] is not None))
    return cols


def parse_entry(text, names="xyzw"):
    text = text.strip().lstrip("-")
    if text == "0":
        return None
    v = [0] * len(names)
    i = 0
    while i < len(text):
        ch = text[i]
        i += 1
        e = 1
        if i < len(text) and text[i] == "^":
            e = int(text[i + 1])
            i += 2
        v[names.index(ch)] += e
    return tuple(v)


def parse_matrix(rows):
    return [[parse_entry(x) for x in row.split()] for row in rows]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
