"""Instance generators: cyclic Latin-square graphs, 1-factorizations and random ensembles."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import combinations

from .graph import EdgeColoredGraph


class InfeasibleError(ValueError):
    pass


FAMILIES = ("cayley", "onefactorization", "random", "proper-random")


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    k: int = 0
    p: float = 0.0
    q: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "cayley" and self.n < 1:
            raise ValueError("cayley needs n >= 1")
        if self.family == "onefactorization" and self.n < 2:
            raise ValueError("onefactorization needs n (= m) >= 2")
        if self.family in ("random", "proper-random"):
            if not 0.0 <= self.p <= 1.0:
                raise ValueError("p must lie in [0, 1]")
            if self.k < 0 or self.n < 1:
                raise ValueError("need n >= 1 and k >= 0")
        if self.family == "random" and self.q < self.k:
            raise ValueError("random needs q >= k")

    def describe(self) -> str:
        return " ".join(f"{k}={v}" for k, v in asdict(self).items())

    def build(self) -> EdgeColoredGraph:
        if self.family == "cayley":
            return gen_cayley(self.n)
        if self.family == "onefactorization":
            return gen_onefactorization(self.n)
        if self.family == "random":
            return gen_random_mindeg(self.n, self.k, self.q, self.p, self.seed)
        return gen_proper_random(self.n, self.k, self.p, self.seed)


def gen_cayley(n: int) -> EdgeColoredGraph:
    """K_{n,n} colored by the addition table of Z_n: edge (i, n+j) gets (i+j) mod n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return EdgeColoredGraph.from_edges(2 * n, ((i, n + j, (i + j) % n) for i in range(n) for j in range(n)))


def gen_onefactorization(m: int) -> EdgeColoredGraph:
    """K_{2m} with the round-robin 1-factorization: vertex 2m-1 is fixed and
    color r pairs it with r, and r+i with r-i (mod 2m-1) for i = 1..m-1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    odd = 2 * m - 1
    edges = []
    for r in range(odd):
        edges.append((r, odd, r))
        for i in range(1, m):
            edges.append(((r + i) % odd, (r - i) % odd, r))
    return EdgeColoredGraph.from_edges(2 * m, edges)


class _Builder:
    def __init__(self, n: int):
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.colors: list[set[int]] = [set() for _ in range(n)]
        self.edges: list[tuple[int, int, int]] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.colors[u].add(c)
        self.colors[v].add(c)
        self.edges.append((u, v, c))

    def non_neighbors(self, v: int) -> list[int]:
        return [w for w in range(self.n) if w != v and w not in self.adj[v]]

    def deficient(self, k: int) -> int | None:
        return next((v for v in range(self.n) if len(self.colors[v]) < k), None)

    def graph(self) -> EdgeColoredGraph:
        return EdgeColoredGraph.from_edges(self.n, self.edges)


def _check_sizes(n: int, k: int) -> None:
    if n <= k:
        raise InfeasibleError(f"n={n} too small for color degree {k} (need n > k)")


def gen_random_mindeg(n: int, k: int, q: int, p: float, seed: int) -> EdgeColoredGraph:
    """G(n, p) with uniform colors from ``range(q)``, repaired to color degree >= k.

    Repair takes the lowest deficient vertex, joins it to a uniform random
    non-neighbor with a color absent at both ends if one exists, else absent
    at the deficient vertex.
    """
    if q < k:
        raise ValueError(f"q={q} < k={k}")
    _check_sizes(n, k)
    rng = random.Random(seed)
    b = _Builder(n)
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            b.add(u, v, rng.randrange(q))
    while (v := b.deficient(k)) is not None:
        options = b.non_neighbors(v)
        if not options:
            raise InfeasibleError(f"vertex {v} has no non-neighbor left to repair with")
        w = rng.choice(options)
        fresh = [c for c in range(q) if c not in b.colors[v]]
        both = [c for c in fresh if c not in b.colors[w]]
        b.add(v, w, rng.choice(both or fresh))
    return b.graph()


def _first_free(b: _Builder, u: int, v: int) -> int:
    c = 0
    while c in b.colors[u] or c in b.colors[v]:
        c += 1
    return c


def gen_proper_random(n: int, k: int, p: float, seed: int) -> EdgeColoredGraph:
    """G(n, p) greedily properly colored in edge order, then degree-repaired
    with edges that take the first color free at both endpoints."""
    _check_sizes(n, k)
    rng = random.Random(seed)
    pairs = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    b = _Builder(n)
    for u, v in pairs:
        b.add(u, v, _first_free(b, u, v))
    while (v := b.deficient(k)) is not None:
        options = b.non_neighbors(v)
        if not options:
            raise InfeasibleError(f"vertex {v} has no non-neighbor left to repair with")
        w = rng.choice(options)
        b.add(v, w, _first_free(b, v, w))
    return b.graph()


def is_proper(graph: EdgeColoredGraph) -> bool:
    return all(len({e.c for e in graph.incident(v)}) == graph.degree(v) for v in range(graph.n))


def color_classes_are_perfect_matchings(graph: EdgeColoredGraph) -> bool:
    for cls in graph.color_classes.values():
        seen = [x for e in cls for x in (e.u, e.v)]
        if len(seen) != graph.n or len(set(seen)) != graph.n:
            return False
    return True


__all__ = [
    "GenSpec",
    "InfeasibleError",
    "gen_cayley",
    "gen_onefactorization",
    "gen_random_mindeg",
    "gen_proper_random",
    "is_proper",
    "color_classes_are_perfect_matchings",
]
