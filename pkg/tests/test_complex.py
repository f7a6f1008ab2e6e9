from __future__ import annotations

from cellres.complex import (EMPTY, Cell, LabeledComplex, f_vector, is_acyclic, reduced_homology_ranks,
                             restrict_leq, validate)
from cellres.families import maximal_power_complex


def test_boundary_of_square_has_a_circle(square_boundary):
    assert validate(square_boundary) == []
    assert reduced_homology_ranks(square_boundary) == (0, 0, 1)
    assert not is_acyclic(square_boundary)


def test_filled_square_is_acyclic(filled_square):
    assert validate(filled_square) == []
    assert is_acyclic(filled_square)


def test_restriction_keeps_ids():
    X = maximal_power_complex(3, 2)
    R = restrict_leq(X, (1, 1, 1))
    assert f_vector(R) == (3, 3, 1)
    assert set(R.cells) <= set(X.cells)
    for cid, c in R.cells.items():
        assert X.cells[cid] == c


def test_validate_catches_bad_label_and_sign():
    cells = [Cell(0, 0, frozenset({0}), (1, 0)), Cell(1, 0, frozenset({1}), (0, 1)),
             Cell(2, 1, frozenset({0, 1}), (1, 0))]
    X = LabeledComplex.build(2, cells, {(2, 0): -1, (2, 1): 1})
    assert any("label" in p for p in validate(X))
    cells[2] = Cell(2, 1, frozenset({0, 1}), (1, 1))
    Y = LabeledComplex.build(2, cells, {(2, 0): 1, (2, 1): 1})
    assert any("boundary of boundary" in p for p in validate(Y))


def test_empty_cell_is_implicit():
    X = maximal_power_complex(3, 1)
    assert X.cells[EMPTY].dim == -1
    assert all(X.incidence[(v, EMPTY)] == 1 for v in X.cells_of_dim(0))
    assert len(X) == 7
