"""Acceptance gate: nine criteria, each exact and under a wall-clock limit.

Every criterion records a PASS/FAIL line in RESULTS; conftest prints them in
the terminal summary.
"""
from __future__ import annotations

import itertools
import time
from contextlib import contextmanager

from cellres import monomial as mono
from cellres.boothlueker import (betti_from_linear_quotients, bl_ideal_ordered, has_linear_quotients,
                                 is_regular_decomposition, pair_set_formula, set_of_generator)
from cellres.complex import f_vector, validate
from cellres.covering import covering_horizon, full_covering, syzygy_fg_witness, top_t
from cellres.families import Graph, make_family, path_complex
from cellres.linalg import GF32003, QQ
from cellres.morphism import containment_injections, find_multiplication_morphisms, find_renaming_embeddings
from cellres.resolution import betti, free_complex_from_labeled, is_resolution, minimalize, taylor_complex

RESULTS: dict = {}

CORPUS = ["(xz,xw,yz,yw)", "(xy,yz,zw)", "(xy,yz,zw,wt)", "(x,y,z)", "(x^2,xy,y^2)", "(xy,xz,yz)",
          "(x^2,y^2,z^2,xyz)", "(xy,xw,yz,zw)", "(x^3,x^2y,xy^2,y^3,z)", "(xyz,xw,yw,zw)"]


@contextmanager
def criterion(number: int, title: str, limit: float):
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        ok = True
    except AssertionError as exc:
        detail = f" ({exc})" if str(exc) else ""
        raise
    finally:
        elapsed = time.perf_counter() - start
        if ok and elapsed >= limit:
            detail = f" (took {elapsed:.2f}s, limit {limit:g}s)"
            ok = False
        line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {elapsed:.2f}s / {limit:g}s{detail}"
        RESULTS[number] = line
        print(line)
    assert elapsed < limit, f"criterion {number} took {elapsed:.2f}s, limit {limit:g}s"


def ideal(text):
    return mono.parse_ideal(text)[0]


def test_1_square_ideal():
    with criterion(1, "square ideal and its square", 1.0):
        I = ideal("(xz,xw,yz,yw)")
        assert betti(I) == (1, 4, 4, 1)
        assert betti(mono.ideal_power_generators(I, 2)) == (1, 9, 12, 4)
        F = free_complex_from_labeled(make_family("cube", n=2).complex(2))
        shapes = [(len(F.modules[i - 1]), len(F.modules[i])) for i in range(1, len(F.modules))]
        assert shapes == [(1, 9), (9, 12), (12, 4)]


def test_2_triangle_family():
    with criterion(2, "triangle family morphisms and covering", 5.0):
        F = make_family("maximal", n=3)
        xyz = [mono.variable(i, 3) for i in range(3)]
        for k in range(1, 6):
            assert [g.multiplier for g in find_multiplication_morphisms(F.complex(k), F.complex(k + 1))] == xyz
        rep = full_covering(F, 2, [1])
        assert not rep.covered
        assert rep.uncovered_labels() == [[(1, 1, 0), (1, 0, 1), (0, 1, 1)]]
        for i in range(3, 7):
            assert full_covering(F, i, range(1, i)).covered, f"member {i}"


def test_3_maximal_thresholds():
    with criterion(3, "maximal family thresholds", 60.0):
        assert covering_horizon(make_family("maximal", n=3), 6).threshold == 3
        rep = covering_horizon(make_family("maximal", n=4), 5)
        assert rep.threshold in (3, 4)
        assert rep.discrepancy, "reference index discrepancy not flagged"


def test_4_cube_family():
    with criterion(4, "cube family covering", 60.0):
        F = make_family("cube", n=2)
        for p in (2, 3, 4):
            assert full_covering(F, p, [1]).covered, f"C_2^{p}"
        assert full_covering(make_family("cube", n=3), 2, [1]).covered


def test_5_path_ideals():
    with criterion(5, "path ideal resolutions", 30.0):
        assert minimalize(free_complex_from_labeled(path_complex("Y", 4, 1))).ranks() == (1, 3, 2)
        assert minimalize(free_complex_from_labeled(path_complex("Y", 5, 1))).ranks() == (1, 4, 4, 1)
        for n, d in [(4, 1), (4, 2), (5, 1)]:
            Z, Zb = path_complex("Z", n, d), path_complex("Zbar", n, d)
            vz = {Z.cells[v].label for v in Z.cells_of_dim(0)}
            vzb = {Zb.cells[v].label for v in Zb.cells_of_dim(0)}
            assert vz == vzb, (n, d)


def test_6_taylor_negative_control():
    with criterion(6, "Taylor powers witness fails", 10.0):
        F = make_family("taylor_powers", ideal=ideal("(x,y,z)"))
        for h in range(1, 5):
            w = syzygy_fg_witness(F, top_t(F, h), h)
            assert w.status == "FAILED", f"horizon {h}"


def _connected_graphs(max_vertices):
    for nv in range(2, max_vertices + 1):
        pairs = list(itertools.combinations(range(1, nv + 1), 2))
        for r in range(nv - 1, len(pairs) + 1):
            for edges in itertools.combinations(pairs, r):
                G = Graph(nv, edges)
                if G.is_connected():
                    yield G


def test_7_booth_lueker_sweep():
    with criterion(7, "Booth-Lueker sweep", 300.0):
        count = taylor_checked = 0
        for G in _connected_graphs(5):
            count += 1
            I = bl_ideal_ordered(G)
            assert has_linear_quotients(I) and is_regular_decomposition(I), G.edges
            pos = 0
            for i in range(1, G.n + 1):
                for j in range(i + 1, G.n + 1):
                    assert set_of_generator(I, pos) == pair_set_formula(i, j), (G.edges, i, j)
                    pos += 1
            if len(I) <= 11:
                assert (1,) + betti_from_linear_quotients(I) == betti(mono.MonomialIdeal(I.n, I.generators))
                taylor_checked += 1
        assert count == 771 and taylor_checked > 0


def test_8_property_suites():
    with criterion(8, "property suites", 120.0):
        instances = []
        for kind, params, top in [("maximal", {"n": 3}, 4), ("maximal", {"n": 4}, 2), ("cube", {"n": 2}, 3),
                                  ("cube", {"n": 3}, 2), ("bounded", {"n": 3, "d": 2, "b": (1, 1, 1)}, 3),
                                  ("path_Y", {"n": 4}, 2), ("path_Z", {"n": 4}, 2), ("path_Zbar", {"n": 5}, 2),
                                  ("taylor_powers", {"ideal": ideal("(x,y,z)")}, 3),
                                  ("edge_ideal", {"graph": Graph.cycle(4)}, 2), ("simplex_growing", {}, 4)]:
            F = make_family(kind, **params)
            instances += [F.complex(i) for i in range(F.start, top + 1)]
        for X in instances:
            # validate covers the boundary-of-boundary and lcm-label checks
            assert validate(X) == [], f_vector(X)
            assert is_resolution(X), f_vector(X)
            G = minimalize(free_complex_from_labeled(X))
            gens = mono.MonomialIdeal(X.n, tuple(X.cells[v].label for v in X.cells_of_dim(0)))
            if len(gens) <= 12:
                assert G.ranks() == betti(gens), f_vector(X)
        for text in CORPUS:
            I = ideal(text)
            T = free_complex_from_labeled(taylor_complex(I))
            assert minimalize(T).ranks() == betti(I, QQ) == betti(I, GF32003), text


def test_9_unrestricted_families():
    with criterion(9, "path renamings and simplex witness", 30.0):
        P4, P5 = path_complex("Y", 4, 1), path_complex("Y", 5, 1)
        expected = sorted([(0, 1, 2, 3), (1, 2, 3, 4), (3, 2, 1, 0), (4, 3, 2, 1)])
        assert sorted(e.injection for e in find_renaming_embeddings(P4, P5)) == expected
        assert sorted(containment_injections(P4, P5)) == expected
        S = make_family("simplex_growing")
        for t in (1, 2, 3):
            assert syzygy_fg_witness(S, t, 6).ok, f"t={t}"
