"""Booth-Lueker graphs, linear quotients and the decomposition function.

Generator positions are 0-based; variable indices inside set() are 1-based
(x_1..x_n, then y_k is variable n + k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import monomial as mono
from .families import Graph


class LinearQuotientsError(ValueError):
    pass


@dataclass(frozen=True)
class OrderedIdeal:
    """Monomial generators in a fixed order (no sorting, no minimalization)."""

    n: int
    generators: tuple
    names: tuple | None = None

    def __len__(self) -> int:
        return len(self.generators)

    def label(self, j: int) -> str:
        return mono.format_monomial(self.generators[j], self.names or mono.default_names(self.n))


def bl_graph(G: Graph) -> Graph:
    """Complete graph on V(G) plus one vertex per edge joined to its ends."""
    edges = [(i, j) for i in range(1, G.n + 1) for j in range(i + 1, G.n + 1)]
    for k, (i, j) in enumerate(G.edges, start=1):
        edges += [(i, G.n + k), (j, G.n + k)]
    return Graph(G.n + len(G.edges), tuple(edges))


def bl_names(G: Graph) -> tuple:
    return tuple(f"x{i}" for i in range(1, G.n + 1)) + tuple(f"y{k}" for k in range(1, len(G.edges) + 1))


def bl_ideal_ordered(G: Graph) -> OrderedIdeal:
    """x_ix_j in lexicographic pair order, then x_iy_k, x_jy_k per edge k = ij."""
    N = G.n + len(G.edges)

    def sq(*idx):
        v = [0] * N
        for i in idx:
            v[i - 1] = 1
        return tuple(v)

    gens = [sq(i, j) for i in range(1, G.n + 1) for j in range(i + 1, G.n + 1)]
    for k, (i, j) in enumerate(G.edges, start=1):
        gens += [sq(i, G.n + k), sq(j, G.n + k)]
    return OrderedIdeal(N, tuple(gens), bl_names(G))


def colon_generators(I: OrderedIdeal, j: int) -> list:
    """Minimal generators of (m_1, ..., m_{j-1}) : m_j (positions before j)."""
    mj = I.generators[j]
    quots = [mono.quotient(m, mono.gcd(m, mj)) for m in I.generators[:j]]
    if not quots:
        return []
    return list(mono.MonomialIdeal(I.n, tuple(quots)).generators)


def has_linear_quotients(I: OrderedIdeal) -> bool:
    return all(all(sum(g) == 1 for g in colon_generators(I, j)) for j in range(len(I)))


def set_of_generator(I: OrderedIdeal, j: int) -> frozenset:
    gens = colon_generators(I, j)
    if any(sum(g) != 1 for g in gens):
        raise LinearQuotientsError(f"colon ideal at position {j} is not generated by variables")
    return frozenset(g.index(1) + 1 for g in gens)


def decomposition_function(I: OrderedIdeal, m: Sequence[int]) -> int:
    """Position of the first generator dividing m."""
    for j, g in enumerate(I.generators):
        if mono.divides(g, m):
            return j
    raise LinearQuotientsError(f"{tuple(m)} is not in the ideal")


def regularity_failures(I: OrderedIdeal) -> list:
    """(position, t) pairs where set(b(x_t m)) is not inside set(m)."""
    sets = [set_of_generator(I, j) for j in range(len(I))]
    bad = []
    for j, m in enumerate(I.generators):
        for t in sorted(sets[j]):
            b = decomposition_function(I, mono.mul(m, mono.variable(t - 1, I.n)))
            if not sets[b] <= sets[j]:
                bad.append((j, t))
    return bad


def is_regular_decomposition(I: OrderedIdeal) -> bool:
    return not regularity_failures(I)


def betti_from_linear_quotients(I: OrderedIdeal) -> tuple:
    """Betti numbers of the ideal: beta_i(I) = sum over generators of C(|set m|, i)."""
    sizes = [len(set_of_generator(I, j)) for j in range(len(I))]
    top = max(sizes, default=0)
    return tuple(sum(comb(s, i) for s in sizes) for i in range(top + 1))


# ------------------------------------------------------------ closed forms

def pair_set_formula(i: int, j: int) -> frozenset:
    """Closed form for set(x_ix_j), i < j."""
    return frozenset(range(1, i)) | frozenset(range(i + 1, j))


def edge_set_formula(G: Graph, i: int, k: int, earlier_only: bool) -> frozenset:
    """Closed form for set(x_iy_k).

    Without ``earlier_only`` every edge at x_i contributes its y variable;
    with it only edges numbered before k do, which is what the colon gives.
    """
    xs = frozenset(r for r in range(1, G.n + 1) if r != i)
    ys = frozenset(G.n + t for t, e in enumerate(G.edges, start=1)
                   if i in e and (not earlier_only or t < k))
    return xs | ys


@dataclass
class BLReport:
    graph: Graph
    ideal: OrderedIdeal
    linear_quotients: bool
    regular: bool
    sets: list
    pair_mismatches: list = field(default_factory=list)   # positions where set(x_ix_j) differs from the closed form
    edge_mismatches: list = field(default_factory=list)   # (position, colon set, all-edges formula)
    edge_earlier_mismatches: list = field(default_factory=list)
    betti: tuple = ()


def analyse(G: Graph) -> BLReport:
    I = bl_ideal_ordered(G)
    lq = has_linear_quotients(I)
    if not lq:
        return BLReport(G, I, False, False, [])
    sets = [set_of_generator(I, j) for j in range(len(I))]
    report = BLReport(G, I, True, is_regular_decomposition(I), sets, betti=betti_from_linear_quotients(I))
    npairs = G.n * (G.n - 1) // 2
    pos = 0
    for i in range(1, G.n + 1):
        for j in range(i + 1, G.n + 1):
            if sets[pos] != pair_set_formula(i, j):
                report.pair_mismatches.append(pos)
            pos += 1
    for k, e in enumerate(G.edges, start=1):
        for i in e:
            full = edge_set_formula(G, i, k, earlier_only=False)
            earlier = edge_set_formula(G, i, k, earlier_only=True)
            if sets[pos] != full:
                report.edge_mismatches.append((pos, sets[pos], full))
            if sets[pos] != earlier:
                report.edge_earlier_mismatches.append((pos, sets[pos], earlier))
            pos += 1
    assert pos == len(I) and npairs <= pos
    return report
