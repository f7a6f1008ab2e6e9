from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from cellres import monomial as mono

vec3 = st.tuples(*[st.integers(0, 4)] * 3)


@given(vec3, vec3)
def test_lcm_gcd_duality(a, b):
    assert mono.mul(mono.lcm(a, b), mono.gcd(a, b)) == mono.mul(a, b)
    assert mono.divides(a, mono.lcm(a, b)) and mono.divides(mono.gcd(a, b), a)


@given(vec3, vec3)
def test_quotient_inverts_mul(a, b):
    assert mono.quotient(mono.mul(a, b), a) == tuple(b)


def test_quotient_rejects_non_divisor():
    with pytest.raises(mono.MonomialError):
        mono.quotient((1, 0), (0, 1))


def test_length_mismatch():
    with pytest.raises(mono.MonomialError):
        mono.lcm((1, 0), (1, 0, 0))


@given(st.lists(vec3, min_size=1, max_size=8))
def test_minimal_generators_are_an_antichain_generating_the_same_ideal(gens):
    I = mono.minimalize_generators(gens)
    for g, h in itertools.permutations(I.generators, 2):
        assert not mono.divides(g, h)
    for g in gens:
        assert I.contains(g)
    assert set(I.generators) <= set(gens)


def test_generators_sorted_descending_lex():
    I = mono.MonomialIdeal(3, ((0, 0, 1), (1, 0, 0), (0, 1, 0)))
    assert I.generators == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_power_generators_against_products():
    I, _ = mono.parse_ideal("(xz,xw,yz,yw)")
    sq = mono.ideal_power_generators(I, 2)
    brute = {mono.mul(a, b) for a in I.generators for b in I.generators}
    assert set(sq.generators) == brute and len(sq) == 9


def test_parse_default_and_indexed_names():
    I, names = mono.parse_ideal("(xz, xw, yz, yw)")
    assert names == ("x", "y", "z", "w") and len(I) == 4
    J, names = mono.parse_ideal("(x1x2, x2x3, x3^2)")
    assert names == ("x1", "x2", "x3")
    assert (0, 0, 2) in J.generators
    with pytest.raises(mono.MonomialError):
        mono.parse_ideal("(q)")


def test_monomials_of_degree_count():
    for n in range(1, 5):
        for d in range(0, 5):
            assert len(mono.monomials_of_degree(n, d)) == len(list(itertools.combinations_with_replacement(range(n), d)))


def test_format_round_trip():
    I, names = mono.parse_ideal("(x^2y,zw^3)")
    text = "(" + ",".join(mono.format_monomial(g, names) for g in I.generators) + ")"
    assert mono.parse_ideal(text, names)[0] == I
