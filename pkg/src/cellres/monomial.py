"""Exponent vectors, monomial ideals and a small parser for ideal strings.

Monomials are dense tuples of non-negative integers.  All arithmetic is
index based; variable names only matter for parsing and printing.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

ExponentVector = tuple  # tuple[int, ...]

DEFAULT_NAMES = ("x", "y", "z", "w", "t", "u", "v")


class MonomialError(ValueError):
    pass


def _check(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise MonomialError(f"length mismatch: {len(a)} != {len(b)}")


def lcm(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check(a, b)
    return tuple(max(p, q) for p, q in zip(a, b))


def gcd(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check(a, b)
    return tuple(min(p, q) for p, q in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    _check(a, b)
    return tuple(p + q for p, q in zip(a, b))


def quotient(b: Sequence[int], a: Sequence[int]) -> ExponentVector:
    """b / a; requires divides(a, b)."""
    _check(a, b)
    out = tuple(q - p for p, q in zip(a, b))
    if min(out, default=0) < 0:
        raise MonomialError(f"{tuple(a)} does not divide {tuple(b)}")
    return out


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check(a, b)
    return all(p <= q for p, q in zip(a, b))


def lcm_all(vectors: Iterable[Sequence[int]], n: int) -> ExponentVector:
    out = (0,) * n
    for v in vectors:
        out = lcm(out, v)
    return out


def degree(a: Sequence[int]) -> int:
    return sum(a)


def one(n: int) -> ExponentVector:
    return (0,) * n


def variable(i: int, n: int) -> ExponentVector:
    return tuple(1 if k == i else 0 for k in range(n))


def lex_key(a: Sequence[int]) -> tuple:
    # descending lex with x_1 largest: sort ascending on the negated entries
    return tuple(-e for e in a)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    ``generators`` is stored sorted in descending lex order.  An empty
    generator tuple is the zero ideal.
    """

    n: int
    generators: tuple

    def __post_init__(self):
        gens = _minimal(self.generators, self.n)
        object.__setattr__(self, "generators", gens)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def contains(self, m: Sequence[int]) -> bool:
        return any(divides(g, m) for g in self.generators)


def _minimal(gens: Iterable[Sequence[int]], n: int) -> tuple:
    unique = set()
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != n:
            raise MonomialError(f"generator {g} has length {len(g)}, expected {n}")
        if min(g, default=0) < 0:
            raise MonomialError(f"negative exponent in {g}")
        unique.add(g)
    # a divisor has no larger total degree, so scanning by degree suffices
    ordered = sorted(unique, key=lambda g: (sum(g), lex_key(g)))
    kept: list = []
    for g in ordered:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lex_key))


def minimalize_generators(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if n is None:
        if not gens:
            raise MonomialError("cannot infer the variable count of an empty generator set")
        n = len(gens[0])
    return MonomialIdeal(n, tuple(gens))


def ideal_power_generators(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise MonomialError("power must be positive")
    current = {one(ideal.n)}
    for _ in range(k):
        current = {mul(a, g) for a in current for g in ideal.generators}
        current = set(_minimal(current, ideal.n))
    return MonomialIdeal(ideal.n, tuple(current))


def monomials_of_degree(n: int, d: int) -> list:
    """All exponent vectors of total degree d in n variables, descending lex."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        v = [0] * n
        for i in combo:
            v[i] += 1
        out.append(tuple(v))
    return sorted(out, key=lex_key)


# ---------------------------------------------------------------- parsing

def default_names(n: int) -> tuple:
    if n <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


_TOKEN = re.compile(r"([A-Za-z][0-9]*)(?:\^([0-9]+))?")


def parse_ideal(text: str, names: Sequence[str] | None = None) -> tuple[MonomialIdeal, tuple]:
    """Parse ``'(xz,xw,yz,yw)'`` into an ideal and the variable names used.

    Without explicit names, single letters from x,y,z,w,t,u,v are used; any
    indexed token such as ``x3`` switches to x1,x2,... naming.  The variable
    count is the largest index referenced.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",") if p.strip()]
    if not parts:
        raise MonomialError(f"no generators in {text!r}")
    parsed = [_parse_monomial_tokens(p) for p in parts]
    if names is None:
        used = {name for mono in parsed for name, _ in mono}
        if any(re.fullmatch(r"[A-Za-z][0-9]+", u) for u in used):
            idx = []
            for u in used:
                m = re.fullmatch(r"x([0-9]+)", u)
                if not m or int(m.group(1)) < 1:
                    raise MonomialError(f"cannot mix indexed and lettered variables: {sorted(used)}")
                idx.append(int(m.group(1)))
            names = tuple(f"x{i}" for i in range(1, max(idx) + 1))
        else:
            unknown = used - set(DEFAULT_NAMES)
            if unknown:
                raise MonomialError(f"unknown variables {sorted(unknown)}; pass explicit names")
            top = max(DEFAULT_NAMES.index(u) for u in used)
            names = DEFAULT_NAMES[: top + 1]
    names = tuple(names)
    position = {name: i for i, name in enumerate(names)}
    gens = []
    for mono in parsed:
        v = [0] * len(names)
        for name, e in mono:
            if name not in position:
                raise MonomialError(f"undeclared variable {name!r}")
            v[position[name]] += e
        gens.append(tuple(v))
    return MonomialIdeal(len(names), tuple(gens)), names


def _parse_monomial_tokens(text: str) -> list:
    text = text.replace("*", "").replace(" ", "")
    if text == "1":
        return []
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise MonomialError(f"cannot parse monomial {text!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
        pos = m.end()
    return out


def format_monomial(a: Sequence[int], names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(a))
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "".join(parts) if parts else "1"
