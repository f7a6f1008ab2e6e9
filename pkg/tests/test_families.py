from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cellres import monomial as mono
from cellres.complex import euler_characteristic, f_vector, validate
from cellres.families import (FAMILY_KINDS, FamilyError, FamilyMap, Graph, bounded_power_complex, cube_complex,
                              edge_power_complex, equigenerated_subcomplex, graph_to_edge_ideal, make_family,
                              maximal_power_complex, path_complex, path_ideal, simplex_growing_complex,
                              standard_pairing, taylor_powers_complex)
from cellres.resolution import is_resolution


def labels(X):
    return {X.cells[v].label for v in X.cells_of_dim(0)}


def xyz(text):
    return mono.parse_ideal(text, ("x", "y", "z"))[0]


def test_maximal_counts():
    X = maximal_power_complex(3, 4)
    assert f_vector(X) == (15, 30, 16)
    assert labels(X) == set(mono.monomials_of_degree(3, 4))


@pytest.mark.parametrize("n,p", list(itertools.product(range(1, 4), range(1, 4))))
def test_cube_counts(n, p):
    X = cube_complex(standard_pairing(n), p)
    fv = f_vector(X)
    assert fv[0] == (p + 1) ** n
    assert fv[-1] == p ** n and len(fv) == n + 1
    assert validate(X) == []


def _power_by_brute_force(n, d, b, m):
    base = [a for a in mono.monomials_of_degree(n, d) if mono.divides(a, b)]
    prods = {mono.one(n)}
    for _ in range(m):
        prods = {mono.mul(p, a) for p in prods for a in base}
    return prods


@pytest.mark.parametrize("n,d,b,m", [
    (3, 2, (1, 1, 1), 1), (3, 2, (1, 1, 1), 2), (3, 2, (2, 1, 1), 3), (4, 2, (1, 1, 1, 1), 2),
    (4, 2, (2, 1, 0, 1), 2), (4, 3, (1, 2, 1, 1), 2), (3, 1, (1, 1, 0), 3), (2, 2, (2, 1), 3),
])
def test_bounded_labels_are_the_power_generators(n, d, b, m):
    X = bounded_power_complex(n, d, b, m)
    assert labels(X) == _power_by_brute_force(n, d, b, m)
    assert validate(X) == [] and is_resolution(X)


def test_bounded_rejects_bad_bounds():
    with pytest.raises(FamilyError):
        bounded_power_complex(3, 2, (1, 1), 1)
    with pytest.raises(FamilyError):
        bounded_power_complex(3, 2, (1, 0, 0), 1)


@pytest.mark.parametrize("graph,d,fv", [
    (Graph.path(4), 1, (3, 3, 1)), (Graph.path(4), 2, (6, 8, 3)),
    (Graph.cycle(4), 1, (4, 4, 1)), (Graph.cycle(4), 2, (9, 12, 4)),
    (Graph.complete(3), 1, (3, 3, 1)), (Graph.complete(3), 2, (6, 9, 4)),
])
def test_edge_ideal_powers(graph, d, fv):
    X = edge_power_complex(graph, d)
    assert f_vector(X) == fv
    assert labels(X) == set(mono.ideal_power_generators(graph_to_edge_ideal(graph), d).generators)
    assert is_resolution(X)


def test_graph_helpers():
    assert Graph.path(3).edges == ((1, 2), (2, 3))
    assert Graph.cycle(4).is_connected()
    assert not Graph(4, ((1, 2), (3, 4))).is_connected()
    assert len(Graph.complete(4).edges) == 6
    assert path_ideal(4) == graph_to_edge_ideal(Graph.path(4))


@pytest.mark.parametrize("variant", ["Y", "Z", "Zbar"])
@pytest.mark.parametrize("n,d", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)])
def test_path_complexes_resolve_path_powers(variant, n, d):
    X = path_complex(variant, n, d)
    assert labels(X) == set(mono.ideal_power_generators(path_ideal(n), d).generators)
    assert validate(X) == [] and is_resolution(X)


def test_zbar_refines_z():
    assert f_vector(path_complex("Z", 4, 2)) == (6, 8, 3)
    assert f_vector(path_complex("Zbar", 4, 2)) == (6, 9, 4)


def test_equigenerated_subcomplex():
    X = maximal_power_complex(3, 2)
    assert f_vector(equigenerated_subcomplex(X, xyz("(x^2,xy,y^2)"))) == (3, 2)
    assert f_vector(equigenerated_subcomplex(X, xyz("(xy,yz,xz)"))) == (3, 3, 1)
    with pytest.raises(FamilyError):
        equigenerated_subcomplex(X, xyz("(xyz)"))


@pytest.mark.parametrize("n", range(5))
def test_simplex_growing(n):
    X = simplex_growing_complex(n)
    assert f_vector(X) == tuple(len(list(itertools.combinations(range(n + 1), k + 1))) for k in range(n + 1))
    assert labels(X) == {mono.variable(i, n + 1) for i in range(n + 1)}


def test_taylor_powers():
    X = taylor_powers_complex(xyz("(x,y)"), 2)
    assert f_vector(X) == (3, 3, 1)
    assert is_resolution(X)


def test_family_maps_compose_steps():
    F = make_family("maximal", n=3)
    assert F.describe() == "maximal(n=3)"
    assert [m.multiplier for m in F.maps(1, 3)] == sorted(mono.monomials_of_degree(3, 2), key=mono.lex_key)
    with pytest.raises(FamilyError):
        F.maps(2, 2)
    with pytest.raises(FamilyError):
        F.complex(0)


def test_simplex_family_uses_renamings():
    S = make_family("simplex_growing")
    assert S.start == 0
    maps = S.maps(0, 2)
    assert sorted(m.injection for m in maps) == [(0,), (1,), (2,)]
    assert all(m.multiplier == (0, 0, 0) for m in maps)


def test_family_map_then():
    a = FamilyMap(1, 2, (1, 0), None)
    b = FamilyMap(2, 3, (0, 0, 1), (0, 2))
    c = a.then(b)
    assert c.apply((1, 1)) == b.apply(a.apply((1, 1)))
    with pytest.raises(FamilyError):
        b.then(a)


def test_unknown_family_kind():
    with pytest.raises(FamilyError):
        make_family("nope")
    assert "simplex_growing" in FAMILY_KINDS


@pytest.mark.parametrize("kind,params", [
    ("maximal", {"n": 3}), ("cube", {"n": 2}), ("bounded", {"n": 3, "d": 2, "b": (1, 1, 1)}),
    ("path_Y", {"n": 4}), ("path_Z", {"n": 4}), ("path_Zbar", {"n": 4}),
    ("taylor_powers", {"ideal": xyz("(x,y,z)")}), ("edge_ideal", {"graph": Graph.cycle(4)}),
    ("simplex_growing", {}),
])
def test_every_family_member_is_a_resolution(kind, params):
    F = make_family(kind, **params)
    for i in range(F.start, F.start + 3):
        X = F.complex(i)
        assert validate(X) == [] and is_resolution(X)
        assert euler_characteristic(X) == 1


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3))
def test_family_maps_send_vertices_to_vertices(n_pairs, p):
    F = make_family("cube", n=n_pairs) if n_pairs < 3 else make_family("maximal", n=3)
    j, i = 1, min(p + 1, 3)
    target = labels(F.complex(i))
    for m in F.maps(j, i):
        assert all(m.apply(a) in target for a in labels(F.complex(j)))
