"""Constructors for the indexed families of labeled complexes, and the family wrapper."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import monomial as mono
from .complex import EMPTY, Cell, LabeledComplex, full_subcomplex, restrict_leq
from .morphism import (MultiplicationMorphism, find_multiplication_morphisms,
                       find_renaming_embeddings, push_label)
from .resolution import taylor_complex
from .subdivision import (ArrangementSpec, HyperplaneFamily, build_arrangement_complex,
                          coordinate_families)


class FamilyError(ValueError):
    pass


# ------------------------------------------------------------ graphs

@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges are sorted pairs in sorted order."""

    n: int
    edges: tuple

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise FamilyError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise FamilyError(f"edge {e} outside 1..{self.n}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise FamilyError(f"repeated edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen, stack = {1}, [1]
        while stack:
            for w in adj[stack.pop()] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.n


def graph_to_edge_ideal(graph: Graph) -> mono.MonomialIdeal:
    gens = []
    for i, j in graph.edges:
        v = [0] * graph.n
        v[i - 1] = v[j - 1] = 1
        gens.append(tuple(v))
    return mono.MonomialIdeal(graph.n, tuple(gens))


# ------------------------------------------------------------ constructors

def maximal_power_complex(n: int, k: int) -> LabeledComplex:
    """Subdivided simplex whose vertices are the degree-k monomials in n variables."""
    if n < 1 or k < 1:
        raise FamilyError("need n >= 1 and k >= 1")
    spec = ArrangementSpec(tuple(mono.monomials_of_degree(n, k)), tuple(coordinate_families(n)))
    return build_arrangement_complex(spec)


def cube_complex(pairing: Sequence[Sequence[int]], p: int) -> LabeledComplex:
    """Subdivided cube for I_P^p, where I_P picks one variable from each pair.

    ``pairing`` lists disjoint pairs of 0-based variable indices; the ring has
    one variable per listed index (2 * len(pairing) in total).
    """
    if p < 1:
        raise FamilyError("power must be positive")
    flat = [i for pair in pairing for i in pair]
    if any(len(pair) != 2 for pair in pairing):
        raise FamilyError("every pair must have two entries")
    if len(set(flat)) != len(flat):
        raise FamilyError(f"pairs overlap: {pairing}")
    n = len(flat)
    if sorted(flat) != list(range(n)):
        raise FamilyError(f"pairs must use exactly the variables 0..{n - 1}")
    gens = []
    for choice in _products([list(pair) for pair in pairing]):
        v = [0] * n
        for i in choice:
            v[i] = 1
        gens.append(tuple(v))
    ideal = mono.ideal_power_generators(mono.MonomialIdeal(n, tuple(gens)), p)
    spec = ArrangementSpec(ideal.generators, tuple(coordinate_families(n)))
    return build_arrangement_complex(spec)


def _products(lists):
    if not lists:
        yield ()
        return
    for x in lists[0]:
        for rest in _products(lists[1:]):
            yield (x,) + rest


def standard_pairing(n: int) -> list:
    """Pairs (0,1), (2,3), ... so that x,y | z,w | ... are paired."""
    return [(2 * i, 2 * i + 1) for i in range(n)]


def bounded_power_complex(n: int, d: int, b: Sequence[int], m: int) -> LabeledComplex:
    """Restriction of the degree m*d maximal complex to labels dividing b^m."""
    b = tuple(b)
    if len(b) != n:
        raise FamilyError(f"bound {b} has length {len(b)}, expected {n}")
    if not any(mono.divides(a, b) for a in mono.monomials_of_degree(n, d)):
        raise FamilyError(f"no degree-{d} monomial divides {b}")
    X = maximal_power_complex(n, m * d)
    return restrict_leq(X, tuple(m * e for e in b))


def path_ideal(n: int) -> mono.MonomialIdeal:
    return graph_to_edge_ideal(Graph.path(n))


def path_functionals(variant: str, n: int) -> list:
    """Coordinate, alternating-sum and every-third-sum functionals (deduplicated)."""
    if variant not in ("Y", "Z", "Zbar"):
        raise FamilyError(f"unknown path variant {variant!r}")
    out = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]

    def stride_sum(i: int, step: int) -> tuple:
        v = [0] * n
        for k in range((i - 1) // step + 1):
            v[i - step * k - 1] = 1
        return tuple(v)

    if variant in ("Z", "Zbar"):
        out += [stride_sum(i, 2) for i in range(1, n + 1)]
    if variant == "Zbar":
        out += [stride_sum(i, 3) for i in range(1, n + 1)]
    uniq = []
    for f in out:
        if f not in uniq:
            uniq.append(f)
    return uniq


def path_complex(variant: str, n: int, d: int) -> LabeledComplex:
    if n < 2 or d < 1:
        raise FamilyError("need n >= 2 and d >= 1")
    fams = tuple(HyperplaneFamily(f) for f in path_functionals(variant, n))
    ideal = mono.ideal_power_generators(path_ideal(n), d)
    return build_arrangement_complex(ArrangementSpec(ideal.generators, fams))


def edge_power_complex(graph: Graph, d: int) -> LabeledComplex:
    """Newton polytope of I_G^d cut by the coordinate hyperplanes."""
    ideal = mono.ideal_power_generators(graph_to_edge_ideal(graph), d)
    return build_arrangement_complex(ArrangementSpec(ideal.generators, tuple(coordinate_families(graph.n))))


def taylor_powers_complex(ideal: mono.MonomialIdeal, k: int) -> LabeledComplex:
    return taylor_complex(mono.ideal_power_generators(ideal, k))


def equigenerated_subcomplex(X: LabeledComplex, ideal: mono.MonomialIdeal) -> LabeledComplex:
    """Full subcomplex on the vertices labeled by generators of ``ideal``."""
    ids = []
    for g in ideal.generators:
        v = X.vertex_by_label.get(g)
        if v is None:
            raise FamilyError(f"generator {g} is not a vertex label")
        ids.append(v)
    return full_subcomplex(X, ids)


def simplex_growing_complex(n: int) -> LabeledComplex:
    """Full n-simplex over n+1 variables, vertex i labeled by the i-th variable."""
    if n < 0:
        raise FamilyError("n must be non-negative")
    return taylor_complex(mono.MonomialIdeal(n + 1, tuple(mono.variable(i, n + 1) for i in range(n + 1))))


# ------------------------------------------------------------ families

@dataclass(frozen=True)
class FamilyMap:
    """Label map of a family morphism: rename variables, then multiply."""

    source: int
    target: int
    multiplier: tuple
    injection: tuple | None = None

    def apply(self, label: Sequence[int]) -> tuple:
        if self.injection is not None:
            label = push_label(label, self.injection, len(self.multiplier))
        return mono.mul(label, self.multiplier)

    def then(self, other: "FamilyMap") -> "FamilyMap":
        """``other`` after ``self``."""
        if self.target != other.source:
            raise FamilyError("maps do not compose")
        if other.injection is None:
            inj = self.injection
            mult = mono.mul(self.multiplier, other.multiplier)
        else:
            base = self.injection if self.injection is not None else tuple(range(len(self.multiplier)))
            inj = tuple(other.injection[i] for i in base)
            mult = mono.mul(push_label(self.multiplier, other.injection, len(other.multiplier)),
                            other.multiplier)
        return FamilyMap(self.source, other.target, mult, inj)


@dataclass
class Family:
    """Indexed family of complexes with maps between consecutive members.

    Maps between non-consecutive members are composites of consecutive ones.
    """

    kind: str
    params: dict
    start: int
    builder: Callable[[int], LabeledComplex]
    stepper: Callable[["Family", int], list]
    _complexes: dict = field(default_factory=dict, repr=False)
    _steps: dict = field(default_factory=dict, repr=False)
    _maps: dict = field(default_factory=dict, repr=False)

    def complex(self, i: int) -> LabeledComplex:
        if i < self.start:
            raise FamilyError(f"index {i} below the family start {self.start}")
        if i not in self._complexes:
            self._complexes[i] = self.builder(i)
        return self._complexes[i]

    def steps(self, i: int) -> list:
        """Morphisms from member i-1 to member i."""
        if i not in self._steps:
            self._steps[i] = self.stepper(self, i)
        return self._steps[i]

    def maps(self, j: int, i: int) -> list:
        """Distinct label maps from member j to member i (j < i), composed from steps."""
        if j >= i:
            raise FamilyError("maps go from lower to higher index")
        key = (j, i)
        if key not in self._maps:
            if j == i - 1:
                out = [_as_family_map(s, j, i) for s in self.steps(i)]
            else:
                out = []
                seen = set()
                for a in self.maps(j, i - 1):
                    for s in self.steps(i):
                        c = a.then(_as_family_map(s, i - 1, i))
                        k = (c.multiplier, c.injection)
                        if k not in seen:
                            seen.add(k)
                            out.append(c)
            self._maps[key] = out
        return self._maps[key]

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.kind}({args})"


def _as_family_map(step, j: int, i: int) -> FamilyMap:
    if isinstance(step, FamilyMap):
        return step
    if isinstance(step, MultiplicationMorphism):
        return FamilyMap(j, i, step.multiplier, None)
    # renaming embedding
    return FamilyMap(j, i, step.morphism.multiplier, step.injection)


def _multiplication_steps(fam: Family, i: int) -> list:
    return find_multiplication_morphisms(fam.complex(i - 1), fam.complex(i))


def _renaming_steps(fam: Family, i: int) -> list:
    return find_renaming_embeddings(fam.complex(i - 1), fam.complex(i), order_preserving=True)


FAMILY_KINDS = ("maximal", "cube", "bounded", "path_Y", "path_Z", "path_Zbar",
                "taylor_powers", "edge_ideal", "simplex_growing")


def make_family(kind: str, **params) -> Family:
    """Build a family from its kind and parameters.

    maximal: n.  cube: n (pairs) or pairing.  bounded: n, d, b.
    path_Y / path_Z / path_Zbar: n.  taylor_powers and edge_ideal: ideal or
    graph; members are the Taylor complexes of the powers, respectively the
    coordinate subdivisions of the Newton polytopes of the powers.
    simplex_growing: none.
    """
    if kind == "maximal":
        n = int(params["n"])
        return Family(kind, {"n": n}, 1, lambda k: maximal_power_complex(n, k), _multiplication_steps)
    if kind == "cube":
        pairing = params.get("pairing") or standard_pairing(int(params["n"]))
        pairing = [tuple(p) for p in pairing]
        return Family(kind, {"pairing": pairing}, 1, lambda p: cube_complex(pairing, p), _multiplication_steps)
    if kind == "bounded":
        n, d, b = int(params["n"]), int(params["d"]), tuple(params["b"])
        return Family(kind, {"n": n, "d": d, "b": b}, 1,
                      lambda m: bounded_power_complex(n, d, b, m), _multiplication_steps)
    if kind in ("path_Y", "path_Z", "path_Zbar"):
        n = int(params["n"])
        variant = kind.split("_", 1)[1]
        return Family(kind, {"n": n}, 1, lambda d: path_complex(variant, n, d), _multiplication_steps)
    if kind == "taylor_powers":
        ideal = params["ideal"]
        shown = "(" + ",".join(mono.format_monomial(g) for g in ideal.generators) + ")"
        return Family(kind, {"ideal": shown}, 1,
                      lambda k: taylor_powers_complex(ideal, k), _multiplication_steps)
    if kind == "edge_ideal":
        graph = params["graph"]
        shown = ",".join(f"{i}-{j}" for i, j in graph.edges)
        return Family(kind, {"graph": shown}, 1,
                      lambda d: edge_power_complex(graph, d), _multiplication_steps)
    if kind == "simplex_growing":
        return Family(kind, {}, 0, simplex_growing_complex, _renaming_steps)
    raise FamilyError(f"unknown family kind {kind!r}; choose from {', '.join(FAMILY_KINDS)}")
