"""Branch-and-bound search for rainbow matchings."""

from __future__ import annotations

from ..graph import Edge, EdgeColoredGraph, Matching
from .result import BudgetExceeded, SolveResult, SolveTrace

DEFAULT_BUDGET = 2_000_000


class _Found(Exception):
    pass


class _Search:
    def __init__(self, k: int, budget: int):
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.best: list[Edge] = []

    def run(self, chosen: list[Edge], cand: list[Edge]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(Matching.of(self.best), self.nodes, self.budget)
        if len(chosen) > len(self.best):
            self.best = list(chosen)
        if len(chosen) >= self.k:
            raise _Found
        if not cand:
            return
        covered = {x for e in cand for x in (e.u, e.v)}
        bound = len(chosen) + min(len({e.c for e in cand}), len(covered) // 2)
        # Keep searching while the branch can reach k or still beat the best found.
        if bound < self.k and bound <= len(self.best):
            return
        e, rest = cand[0], cand[1:]
        chosen.append(e)
        self.run(chosen, [f for f in rest if f.c != e.c and not (f.touches(e.u) or f.touches(e.v))])
        chosen.pop()
        self.run(chosen, rest)


def exact_find(graph: EdgeColoredGraph, k: int, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Decide whether ``graph`` has a rainbow matching with ``k`` edges.

    Branches on including or excluding the first remaining edge. When the
    search is exhausted the returned matching is a maximum rainbow matching,
    so a failed result also reports r(G). Raises :class:`BudgetExceeded` after
    ``budget`` search nodes.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    search = _Search(k, budget)
    found = False
    try:
        search.run([], list(graph.edges))
    except _Found:
        found = True
    trace = SolveTrace("exact", info={"exhausted": not found})
    return SolveResult("exact", k, Matching.of(search.best), trace, search.nodes)


def rainbow_upper_bound(graph: EdgeColoredGraph) -> int:
    touched = {x for e in graph.edges for x in (e.u, e.v)}
    return min(len(graph.colors), len(touched) // 2)


def exact_max(graph: EdgeColoredGraph, budget: int = DEFAULT_BUDGET) -> tuple[int, Matching]:
    """Size of a largest rainbow matching and a witness, by raising k until it fails."""
    best = Matching()
    spent = 0
    for k in range(1, rainbow_upper_bound(graph) + 1):
        try:
            res = exact_find(graph, k, budget - spent)
        except BudgetExceeded as exc:
            lb = exc.best if len(exc.best) > len(best) else best
            raise BudgetExceeded(lb, spent + exc.nodes, budget) from None
        spent += res.nodes
        if not res.succeeded:
            return res.size, res.matching
        best = res.matching
    return len(best), best
