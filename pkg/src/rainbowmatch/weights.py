"""Exact-rational weightings used by the three case algorithms."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .graph import Edge, EdgeColoredGraph
from .structure import Orientation, VertexPartition

ZERO = Fraction(0)
HALF = Fraction(1, 2)


def frac_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


@dataclass(frozen=True)
class W1Map:
    edge: dict[Edge, Fraction]
    vertex: dict[int, Fraction]
    total: Fraction

    def positive_edges(self) -> list[Edge]:
        return [e for e, w in self.edge.items() if w > 0]

    def to_json(self) -> dict:
        return {
            "edges": [[*e, *frac_json(w)] for e, w in self.edge.items() if w],
            "vertices": {str(v): frac_json(w) for v, w in self.vertex.items() if w},
            "total": frac_json(self.total),
        }


@dataclass(frozen=True)
class W2Map:
    edge: dict[Edge, Fraction]
    tail: dict[Edge, int]
    w_out: tuple[Fraction, ...]
    w_in: tuple[Fraction, ...]
    color_totals: dict[int, Fraction]

    @property
    def vertex(self) -> tuple[Fraction, ...]:
        return tuple(a + b for a, b in zip(self.w_out, self.w_in))

    @property
    def total(self) -> Fraction:
        return sum(self.edge.values(), ZERO)

    def to_json(self) -> dict:
        return {
            "edges": [[self.tail[e], e.other(self.tail[e]), e.c, *frac_json(w)] for e, w in self.edge.items()],
            "color_totals": {str(c): frac_json(w) for c, w in self.color_totals.items()},
        }


@dataclass(frozen=True)
class W3Map:
    vertex: dict[int, Fraction]
    total: Fraction

    def to_json(self) -> dict:
        return {"vertices": {str(v): frac_json(w) for v, w in self.vertex.items()}, "total": frac_json(self.total)}


def compute_w1(graph: EdgeColoredGraph, part: VertexPartition) -> W1Map:
    """Spread weight 1 over the L-edges of each star with two or more L-vertices,
    and 1/2 onto the L-edge of each star with exactly one. Other edges get 0."""
    edge = {e: ZERO for e in graph.edges}
    for s in part.s_star:
        share = Fraction(1, part.l_count(s))
        for e in s.edges:
            if e.u in part.L or e.v in part.L:
                edge[e] = share
    for s in part.e0_star:
        for e in s.edges:
            if e.u in part.L or e.v in part.L:
                edge[e] = HALF
    vertex = {v: ZERO for v in range(graph.n)}
    for e, w in edge.items():
        vertex[e.u] += w
        vertex[e.v] += w
    return W1Map(edge, vertex, sum(edge.values(), ZERO))


def compute_w2(orientation: Orientation) -> W2Map:
    """Each vertex of C sends total weight 1 along its out-edges: 1/d+(v) per
    lone edge and 1/(d+(v) * |S|) per edge of an out-star S (|S| in edges)."""
    graph = orientation.graph
    outdeg = orientation.color_outdegree
    star_of = orientation.decomposition.star_of
    edge: dict[Edge, Fraction] = {}
    w_out = [ZERO] * graph.n
    w_in = [ZERO] * graph.n
    totals: dict[int, Fraction] = defaultdict(lambda: ZERO)
    for e in graph.edges:
        t = orientation.tail(e)
        s = star_of.get(e)
        w = Fraction(1, outdeg[t] * (s.size if s else 1))
        edge[e] = w
        w_out[t] += w
        w_in[e.other(t)] += w
        totals[e.c] += w
    return W2Map(edge, dict(orientation.tails), tuple(w_out), tuple(w_in), dict(sorted(totals.items())))


def compute_w3(part: VertexPartition) -> W3Map:
    vertex = {v: ZERO for v in sorted(part.L)}
    for s in part.s_star:
        share = Fraction(1, part.l_count(s))
        for x in s.vertices:
            if x in part.L:
                vertex[x] += share
    for s in part.e0_star:
        for x in s.vertices:
            if x in part.L:
                vertex[x] += HALF
    return W3Map(vertex, sum(vertex.values(), ZERO))
