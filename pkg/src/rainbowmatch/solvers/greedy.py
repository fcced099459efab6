from __future__ import annotations

from collections import Counter

from ..graph import EdgeColoredGraph, Matching
from .result import SolveResult, SolveTrace


def greedy_baseline(graph: EdgeColoredGraph, k: int) -> SolveResult:
    """Repeatedly take the available edge whose endpoints have the least combined
    degree in the remaining graph (ties by edge order) until ``k`` edges or none left."""
    trace = SolveTrace("greedy")
    avail = list(graph.edges)
    chosen = []
    while len(chosen) < k and avail:
        deg = Counter(x for e in avail for x in (e.u, e.v))
        e = min(avail, key=lambda f: (deg[f.u] + deg[f.v], f))
        chosen.append(e)
        trace.steps.append({"edge": e, "score": deg[e.u] + deg[e.v]})
        avail = [f for f in avail if f.c != e.c and not (f.touches(e.u) or f.touches(e.v))]
    return SolveResult("greedy", k, Matching.of(chosen), trace)
