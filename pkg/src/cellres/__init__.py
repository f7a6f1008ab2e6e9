"""Cellular resolutions of monomial ideals and covering checks for their families."""
from __future__ import annotations

from .complex import Cell, LabeledComplex, f_vector, reduced_homology_ranks, restrict_leq, validate
from .linalg import GF32003, QQ, FieldChoice
from .monomial import MonomialIdeal, ideal_power_generators, parse_ideal
from .resolution import (FreeComplex, betti, free_complex_from_labeled, is_minimal, is_resolution,
                         minimalize, syzygy_generators, taylor_complex)

__all__ = [
    "Cell", "LabeledComplex", "f_vector", "reduced_homology_ranks", "restrict_leq", "validate",
    "GF32003", "QQ", "FieldChoice", "MonomialIdeal", "ideal_power_generators", "parse_ideal",
    "FreeComplex", "betti", "free_complex_from_labeled", "is_minimal", "is_resolution",
    "minimalize", "syzygy_generators", "taylor_complex",
]
