"""Exact scalar fields and sparse Gaussian elimination."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

DEFAULT_PRIME = 32003


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldChoice:
    """Either the rationals (``prime is None``) or GF(prime)."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and not _is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")

    @classmethod
    def parse(cls, text: str) -> "FieldChoice":
        text = text.strip().lower()
        if text in ("q", "qq", "rational", "rationals"):
            return cls(None)
        if text.startswith("p") and text[1:].isdigit():
            return cls(int(text[1:]))
        if text.isdigit():
            return cls(int(text))
        raise ValueError(f"unknown field {text!r}; use q or p<prime>")

    @property
    def name(self) -> str:
        return "q" if self.prime is None else f"p{self.prime}"

    def __str__(self) -> str:
        return "QQ" if self.prime is None else f"GF({self.prime})"

    def coerce(self, x):
        if self.prime is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.prime) % self.prime
        return int(x) % self.prime

    def inv(self, x):
        if self.prime is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.prime)

    def is_zero(self, x) -> bool:
        return self.coerce(x) == 0


QQ = FieldChoice(None)
GF32003 = FieldChoice(DEFAULT_PRIME)


def rank(rows: Iterable[Mapping[int, object]], field: FieldChoice = QQ) -> int:
    """Rank of a sparse matrix given as an iterable of ``{column: value}`` rows."""
    pivots: dict[int, dict] = {}  # pivot column -> normalized row
    r = 0
    for row in rows:
        vec = {}
        for c, v in row.items():
            v = field.coerce(v)
            if v != 0:
                vec[c] = v
        vec = _reduce(vec, pivots, field)
        if not vec:
            continue
        col = min(vec)
        scale = field.inv(vec[col])
        vec = {c: _norm(v * scale, field) for c, v in vec.items()}
        # keep pivot rows fully reduced against the new pivot
        for other in pivots.values():
            f = other.get(col)
            if f is not None:
                _axpy(other, vec, -f, field)
        pivots[col] = vec
        r += 1
    return r


def _norm(v, field: FieldChoice):
    return v % field.prime if field.prime is not None else v


def _axpy(target: dict, src: Mapping, factor, field: FieldChoice) -> None:
    for c, v in src.items():
        nv = _norm(target.get(c, 0) + factor * v, field)
        if nv == 0:
            target.pop(c, None)
        else:
            target[c] = nv


def _reduce(vec: dict, pivots: Mapping[int, dict], field: FieldChoice) -> dict:
    for c in sorted(c for c in vec if c in pivots):
        f = vec.get(c)
        if f:
            _axpy(vec, pivots[c], -f, field)
    return vec
