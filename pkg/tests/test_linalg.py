from __future__ import annotations

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from cellres.linalg import GF32003, QQ, FieldChoice, rank

matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def sparse(rows):
    return [{j: v for j, v in enumerate(row) if v} for row in rows]


def dense_rank_mod_p(rows, p):
    m = [[v % p for v in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


@settings(max_examples=150)
@given(matrices)
def test_rational_rank_matches_sympy(rows):
    assert rank(sparse(rows), QQ) == sympy.Matrix(rows).rank()


@settings(max_examples=150)
@given(matrices, st.sampled_from([2, 3, 5, 32003]))
def test_prime_rank_matches_dense_elimination(rows, p):
    assert rank(sparse(rows), FieldChoice(p)) == dense_rank_mod_p(rows, p)


def test_characteristic_matters():
    rows = [{0: 1, 1: 1}, {0: 1, 1: -1}]
    assert rank(rows, QQ) == 2
    assert rank(rows, FieldChoice(2)) == 1


def test_field_parse():
    assert FieldChoice.parse("q") == QQ
    assert FieldChoice.parse("p32003") == GF32003
    assert GF32003.coerce(Fraction(1, 2)) * 2 % 32003 == 1
