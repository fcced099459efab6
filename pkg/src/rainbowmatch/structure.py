"""Star decomposition, critical reduction, orientation and the C/L partition."""

from __future__ import annotations

import enum
import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Mapping

from .graph import Edge, EdgeColoredGraph, min_color_degree


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Star:
    """A maximal monochromatic star. Size-1 stars are the color-isolated edges."""

    color: int
    center: int
    leaves: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.leaves)

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center, *self.leaves)

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge.make(self.center, x, self.color) for x in self.leaves)

    def to_json(self) -> dict:
        return {"color": self.color, "center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class StarDecomposition:
    stars: tuple[Star, ...]
    e0: tuple[Edge, ...]
    violations: tuple[Edge, ...]

    @cached_property
    def star_of(self) -> dict[Edge, Star]:
        return {e: s for s in self.stars for e in s.edges}


def star_decomposition(graph: EdgeColoredGraph) -> StarDecomposition:
    """Split every color class into stars (>= 2 edges), lone edges and violations.

    An edge is a violation when its color appears on another edge at both of
    its endpoints; a color class is a star forest exactly when it has none.
    The remaining edges of each class always form vertex-disjoint stars.
    """
    stars: list[Star] = []
    e0: list[Edge] = []
    violations: list[Edge] = []
    for color, cls in graph.color_classes.items():
        cnt = Counter(x for e in cls for x in (e.u, e.v))
        rest = []
        for e in cls:
            if cnt[e.u] >= 2 and cnt[e.v] >= 2:
                violations.append(e)
            else:
                rest.append(e)
        cnt = Counter(x for e in rest for x in (e.u, e.v))
        by_center: dict[int, list[int]] = defaultdict(list)
        for e in rest:
            if cnt[e.u] >= 2:
                by_center[e.u].append(e.v)
            elif cnt[e.v] >= 2:
                by_center[e.v].append(e.u)
            else:
                e0.append(e)
        for center, leaves in by_center.items():
            stars.append(Star(color, center, tuple(sorted(leaves))))
    stars.sort(key=lambda s: (s.color, s.center))
    return StarDecomposition(tuple(stars), tuple(sorted(e0)), tuple(sorted(violations)))


@dataclass(frozen=True)
class Deletion:
    edge: Edge
    rule: str  # "a": color repeats at both ends; "b": removable without dropping below k

    def to_json(self) -> dict:
        return {"edge": list(self.edge), "rule": self.rule}


def reduce_to_critical(graph: EdgeColoredGraph, k: int) -> tuple[EdgeColoredGraph, list[Deletion]]:
    """Delete edges until no rule (a) or rule (b) deletion applies.

    Rule (a) removes an edge whose color appears on another edge at both
    endpoints. Rule (b) removes an edge when, at each endpoint, either the
    color degree exceeds ``k`` or the edge's color repeats there. Both rules
    keep the minimum color degree at least ``k``. Each round takes the first
    applicable edge in edge order, trying rule (a) before rule (b).
    """
    if min_color_degree(graph) < k:
        raise PreconditionError(f"minimum color degree {min_color_degree(graph)} < k={k}")
    cnt = [Counter() for _ in range(graph.n)]
    for e in graph.edges:
        cnt[e.u][e.c] += 1
        cnt[e.v][e.c] += 1
    alive = list(graph.edges)
    log: list[Deletion] = []

    def rule_a(e: Edge) -> bool:
        return cnt[e.u][e.c] >= 2 and cnt[e.v][e.c] >= 2

    def rule_b(e: Edge) -> bool:
        return all(len(cnt[x]) > k or cnt[x][e.c] >= 2 for x in (e.u, e.v))

    while True:
        hit = next((Deletion(e, "a") for e in alive if rule_a(e)), None)
        if hit is None:
            hit = next((Deletion(e, "b") for e in alive if rule_b(e)), None)
        if hit is None:
            break
        e = hit.edge
        alive.remove(e)
        for x in (e.u, e.v):
            cnt[x][e.c] -= 1
            if not cnt[x][e.c]:
                del cnt[x][e.c]
        log.append(hit)
    return EdgeColoredGraph(graph.n, tuple(alive)), log


def is_critical(graph: EdgeColoredGraph, k: int) -> bool:
    reduced, log = reduce_to_critical(graph, k)
    return not log


# Orientation


@dataclass(frozen=True)
class Move:
    kind: str  # "M1", "M2" or "M3"
    vertex: int | None
    edges: tuple[Edge, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Orientation:
    graph: EdgeColoredGraph
    decomposition: StarDecomposition
    tails: Mapping[Edge, int]
    moves_applied: int = 0

    def tail(self, e: Edge) -> int:
        return self.tails[e]

    def head(self, e: Edge) -> int:
        return e.other(self.tails[e])

    @cached_property
    def out_edges(self) -> list[list[Edge]]:
        out: list[list[Edge]] = [[] for _ in range(self.graph.n)]
        for e in self.graph.edges:
            out[self.tails[e]].append(e)
        return out

    @cached_property
    def in_edges(self) -> list[list[Edge]]:
        ins: list[list[Edge]] = [[] for _ in range(self.graph.n)]
        for e in self.graph.edges:
            ins[self.head(e)].append(e)
        return ins

    @cached_property
    def color_outdegree(self) -> tuple[int, ...]:
        return tuple(len({e.c for e in es}) for es in self.out_edges)

    @cached_property
    def indegree(self) -> tuple[int, ...]:
        return tuple(len(es) for es in self.in_edges)

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.color_outdegree, reverse=True))

    def to_json(self) -> list[dict]:
        return [{"edge": list(e), "tail": self.tail(e), "head": self.head(e)} for e in self.graph.edges]


def _improves(out: list[int] | tuple[int, ...], changes: dict[int, int]) -> bool:
    # Sorted-descending sequences compare by the largest value whose multiplicity changes.
    delta: Counter = Counter()
    for v, new in changes.items():
        delta[out[v]] -= 1
        delta[new] += 1
    moved = [x for x, d in delta.items() if d]
    return bool(moved) and delta[max(moved)] > 0


class _Search:
    def __init__(self, graph: EdgeColoredGraph, decomposition: StarDecomposition, tails: dict[Edge, int]):
        self.e0 = decomposition.e0
        self.tails = tails
        self.out = [0] * graph.n
        for s in decomposition.stars:
            self.out[s.center] += 1
        self.in_e0: list[set[Edge]] = [set() for _ in range(graph.n)]
        for e in self.e0:
            self.out[tails[e]] += 1
            self.in_e0[e.other(tails[e])].add(e)

    def _reversal(self, v: int, edges: tuple[Edge, ...]) -> dict[int, int]:
        changes = {v: self.out[v] + len(edges)}
        for e in edges:
            t = e.other(v)
            changes[t] = self.out[t] - 1
        return changes

    def first_improving(self) -> Move | None:
        for e in self.e0:
            h = e.other(self.tails[e])
            if _improves(self.out, self._reversal(h, (e,))):
                return Move("M1", h, (e,))
        incoming = [tuple(sorted(s)) for s in self.in_e0]
        for v, ins in enumerate(incoming):
            if ins and _improves(self.out, self._reversal(v, ins)):
                return Move("M2", v, ins)
        for v, ins in enumerate(incoming):
            for pair in combinations(ins, 2):
                if _improves(self.out, self._reversal(v, pair)):
                    return Move("M3", v, pair)
        return None

    def apply(self, move: Move) -> None:
        v = move.vertex
        for e in move.edges:
            t = self.tails[e]
            self.tails[e] = v
            self.out[t] -= 1
            self.out[v] += 1
            self.in_e0[v].discard(e)
            self.in_e0[t].add(e)


def orient(graph: EdgeColoredGraph, decomposition: StarDecomposition | None = None, seed: int = 0) -> Orientation:
    """Direct star edges away from their centers and local-search the lone edges.

    Lone (E0) edges start from the endpoint centering more stars; ties go to the
    lower vertex id when ``seed`` is 0 and to a seeded coin flip otherwise.
    Then the first improving move is applied repeatedly, scanning M1 (one lone
    edge) over edges, M2 (all lone in-edges of a vertex) and M3 (a pair of lone
    in-edges) over vertices, until no move raises the sorted color-outdegree
    sequence lexicographically.
    """
    if decomposition is None:
        decomposition = star_decomposition(graph)
    if decomposition.violations:
        raise PreconditionError(
            f"{len(decomposition.violations)} edges violate the star-forest condition"
        )
    rng = random.Random(seed)
    centers = Counter(s.center for s in decomposition.stars)
    tails: dict[Edge, int] = {}
    for s in decomposition.stars:
        for e in s.edges:
            tails[e] = s.center
    for e in decomposition.e0:
        if centers[e.u] != centers[e.v]:
            tails[e] = e.u if centers[e.u] > centers[e.v] else e.v
        elif seed == 0:
            tails[e] = e.u
        else:
            tails[e] = e.u if rng.random() < 0.5 else e.v
    search = _Search(graph, decomposition, tails)
    applied = 0
    while (move := search.first_improving()) is not None:
        search.apply(move)
        applied += 1
    return Orientation(graph, decomposition, dict(search.tails), applied)


def find_improving_move(orientation: Orientation) -> Move | None:
    return _Search(orientation.graph, orientation.decomposition, dict(orientation.tails)).first_improving()


# Partition and case classification


@dataclass(frozen=True)
class VertexPartition:
    C: frozenset[int]
    L: frozenset[int]
    members: tuple[Star, ...]
    s_star: tuple[Star, ...]
    e0_star: tuple[Star, ...]
    case1_mass: Fraction

    def l_count(self, star: Star) -> int:
        return sum(1 for x in star.vertices if x in self.L)

    def to_json(self) -> dict:
        return {
            "C": sorted(self.C),
            "L": sorted(self.L),
            "s_star": [s.to_json() for s in self.s_star],
            "e0_star": [s.to_json() for s in self.e0_star],
            "case1_mass": [self.case1_mass.numerator, self.case1_mass.denominator],
        }


def partition(graph: EdgeColoredGraph, orientation: Orientation) -> VertexPartition:
    out = orientation.color_outdegree
    C = frozenset(v for v in range(graph.n) if out[v] > 0)
    L = frozenset(range(graph.n)) - C
    members = list(orientation.decomposition.stars)
    for e in orientation.decomposition.e0:
        members.append(Star(e.c, orientation.tail(e), (orientation.head(e),)))
    members.sort(key=lambda s: (s.color, s.center, s.leaves))
    s_star, e0_star = [], []
    for s in members:
        in_l = sum(1 for x in s.vertices if x in L)
        if in_l >= 2:
            s_star.append(s)
        elif in_l == 1:
            e0_star.append(s)
    mass = len(s_star) + Fraction(len(e0_star), 2)
    return VertexPartition(C, L, tuple(members), tuple(s_star), tuple(e0_star), mass)


class Case(str, enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    NONE = "none"


@dataclass(frozen=True)
class CaseLabel:
    case: Case
    applicable: tuple[Case, ...]
    mass: Fraction
    c_count: int
    l_count: int
    case1_threshold: Fraction
    case2_threshold: Fraction

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "applicable": [c.value for c in self.applicable],
            "mass": str(self.mass),
            "C": self.c_count,
            "L": self.l_count,
            "case1_threshold": str(self.case1_threshold),
            "case2_threshold": str(self.case2_threshold),
        }


def hypothesis_holds(n: int, k: int) -> bool:
    """True iff n > 4.25 k^2, compared exactly."""
    return 4 * n > 17 * k * k


def classify_case(part: VertexPartition, n: int, k: int) -> CaseLabel:
    """Label the first of the three cases whose inequality holds, else NONE.

    NONE is returned rather than raised so that a caller checking the counting
    argument (it cannot occur when ``n > 4.25 k^2``) can report it.
    """
    t1 = Fraction(5 * k * k, 2)
    t2 = Fraction(7 * k * k, 4)
    holds = []
    if part.case1_mass >= t1:
        holds.append(Case.CASE1)
    if len(part.C) >= t2:
        holds.append(Case.CASE2)
    if len(part.L) > part.case1_mass:
        holds.append(Case.CASE3)
    case = holds[0] if holds else Case.NONE
    return CaseLabel(case, tuple(holds), part.case1_mass, len(part.C), len(part.L), t1, t2)
