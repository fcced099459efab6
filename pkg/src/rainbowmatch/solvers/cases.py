"""The three weighting-driven constructions, one per case of the partition."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable

from ..graph import Edge, EdgeColoredGraph, Matching
from ..structure import Case, Orientation, PreconditionError, Star, VertexPartition
from ..weights import ZERO, W1Map, W2Map, W3Map
from .result import SolveResult, SolveTrace


class NoWitnessError(RuntimeError):
    """Every vertex of L has w3 >= 1, so the Case 3 construction has no start."""


def components(edges: Iterable[Edge]) -> list[list[Edge]]:
    """Connected components of an edge set, each sorted, ordered by first edge."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = sorted(edges)
    for e in edges:
        parent[find(e.u)] = find(e.v)
    groups: dict[int, list[Edge]] = defaultdict(list)
    for e in edges:
        groups[find(e.u)].append(e)
    return sorted(groups.values(), key=lambda es: es[0])


def _touching(edges: Iterable[Edge], vertices: set[int]) -> list[Edge]:
    return [e for e in edges if e.u in vertices or e.v in vertices]


# Case 1


def case1_solve(
    graph: EdgeColoredGraph, part: VertexPartition, w1: W1Map, k: int, strict: bool = True
) -> SolveResult:
    """Peel the positive-w1 subgraph with the three options, then rebuild a
    matching backwards, adding one edge per step.

    At step i with budget t = 2(k - i): (1) delete a heaviest vertex if its
    weight exceeds t; (2) else delete the color class with the most components
    if it has more than t; (3) else delete both ends of an edge xy together
    with the class of its color, choosing xy to remove the most weight.
    """
    if strict and part.case1_mass < Fraction(5 * k * k, 2):
        raise PreconditionError("case 1 needs |S*| + |E0*|/2 >= 2.5k^2")
    trace = SolveTrace("case1")
    weight = w1.edge
    alive = set(w1.positive_edges())
    history = []
    i = 1
    while alive and i - 1 < k:
        budget = 2 * (k - i)
        vw: dict[int, Fraction] = defaultdict(lambda: ZERO)
        for e in alive:
            vw[e.u] += weight[e]
            vw[e.v] += weight[e]
        v = min(vw, key=lambda x: (-vw[x], x))
        classes: dict[int, list[Edge]] = defaultdict(list)
        for e in alive:
            classes[e.c].append(e)
        comps = {c: components(es) for c, es in classes.items()}
        alpha = min(comps, key=lambda c: (-len(comps[c]), c))
        step: dict = {"step": i}
        if vw[v] > budget:
            removed = _touching(alive, {v})
            step.update(option=1, vertex=v, vertex_weight=vw[v])
            history.append((1, v, sorted(removed)))
        elif len(comps[alpha]) >= budget + 1:
            removed = list(classes[alpha])
            step.update(option=2, color=alpha, components=len(comps[alpha]))
            history.append((2, alpha, comps[alpha]))
        else:
            cw = {c: sum((weight[e] for e in es), ZERO) for c, es in classes.items()}
            xy = min(alive, key=lambda e: (-(vw[e.u] + vw[e.v] + cw[e.c]), e))
            removed = [e for e in alive if e.c == xy.c or e.touches(xy.u) or e.touches(xy.v)]
            bound = Fraction(k - 1, 2) + 4 * (k - i)
            step.update(option=3, edge=xy, bound=bound)
            history.append((3, xy, None))
        step_weight = sum((weight[e] for e in removed), ZERO)
        step["weight"] = step_weight
        if step["option"] == 3:
            step["within_bound"] = step_weight <= step["bound"]
            step["y_in_L"] = xy.u in part.L or xy.v in part.L
        step["removed"] = len(removed)
        trace.steps.append(step)
        alive.difference_update(removed)
        i += 1
    rounds = i - 1
    trace.info["rounds"] = rounds
    trace.info["exhausted"] = not alive
    trace.info["total_weight"] = w1.total

    matching: list[Edge] = []
    used_v: set[int] = set()
    used_c: set[int] = set()
    for (option, key, data), step in zip(reversed(history), reversed(trace.steps)):
        if option == 1:
            pick = next((e for e in data if e.other(key) not in used_v and e.c not in used_c), None)
        elif option == 2:
            comp = next((cs for cs in data if not any(e.u in used_v or e.v in used_v for e in cs)), None)
            pick = comp[0] if comp else None
        else:
            pick = key
        step["added"] = pick
        if pick is None:
            continue
        matching.append(pick)
        used_v.update((pick.u, pick.v))
        used_c.add(pick.c)
    return SolveResult("case1", k, Matching.of(matching), trace)


# Case 2


def case2_solve(
    graph: EdgeColoredGraph, orientation: Orientation, w2: W2Map, k: int, strict: bool = True
) -> SolveResult:
    """Greedy on colors: take the lightest remaining color class (ties by color
    id), match an edge from its largest component, delete everything touching
    that edge or sharing its color."""
    c_count = sum(1 for d in orientation.color_outdegree if d > 0)
    if strict and c_count < Fraction(7 * k * k, 4):
        raise PreconditionError("case 2 needs |C| >= 1.75k^2")
    trace = SolveTrace("case2")
    weight = w2.edge
    alive = set(graph.edges)
    matching: list[Edge] = []
    limit = Fraction(3, 2)
    while len(matching) < k and alive:
        totals: dict[int, Fraction] = defaultdict(lambda: ZERO)
        for e in alive:
            totals[e.c] += weight[e]
        alpha = min((c for c in totals if totals[c] > 0), key=lambda c: (totals[c], c), default=None)
        if alpha is None:
            break
        comps = components(e for e in alive if e.c == alpha)
        comp = min(comps, key=lambda es: (-len(es), es[0]))
        e = comp[0]
        removed = [f for f in alive if f.c == alpha or f.touches(e.u) or f.touches(e.v)]
        drop: dict[int, Fraction] = defaultdict(lambda: ZERO)
        for f in removed:
            if f.c != alpha:
                drop[f.c] += weight[f]
        erosion = max(drop.values(), default=ZERO)
        trace.steps.append(
            {
                "color": alpha,
                "class_weight": totals[alpha],
                "edge": e,
                "max_erosion": erosion,
                "erosion_ok": erosion <= limit,
            }
        )
        matching.append(e)
        alive.difference_update(removed)
    return SolveResult("case2", k, Matching.of(matching), trace)


# Case 3


def incident_stars(part: VertexPartition, v: int) -> list[Star]:
    return [s for s in part.members if v in s.vertices]


def case3_solve(
    graph: EdgeColoredGraph, part: VertexPartition, w3: W3Map, k: int, strict: bool = True
) -> SolveResult:
    """Start at the L-vertex of least w3 and take one edge from each of its k
    stars, in ascending order of how many L-vertices each star has."""
    if strict and not len(part.L) > part.case1_mass:
        raise PreconditionError("case 3 needs |L| > |S*| + |E0*|/2")
    trace = SolveTrace("case3")
    if not w3.vertex:
        raise NoWitnessError("L is empty")
    v = min(w3.vertex, key=lambda x: (w3.vertex[x], x))
    if w3.vertex[v] >= 1:
        raise NoWitnessError(f"min w3 over L is {w3.vertex[v]} at vertex {v}")
    stars = sorted(incident_stars(part, v), key=lambda s: (part.l_count(s), s.color, s.center))[:k]
    sizes = [part.l_count(s) for s in stars]
    trace.info.update(
        vertex=v,
        w3=w3.vertex[v],
        order=[s.to_json() for s in stars],
        l_counts=sizes,
        chain_ok=all(sizes[j] > j + 1 for j in range(1, len(sizes))),
        distinct_centers=len({s.center for s in stars}) == len(stars),
        distinct_colors=len({s.color for s in stars}) == len(stars),
    )
    matching: list[Edge] = []
    used: set[int] = set()
    for pos, s in enumerate(stars, start=1):
        if pos == 1:
            e = Edge.make(s.center, v, s.color)
        else:
            leaf = next((x for x in s.leaves if x in part.L and x not in used), None)
            if leaf is None or s.center in used:
                trace.steps.append({"position": pos, "star": s.to_json(), "edge": None})
                break
            e = Edge.make(s.center, leaf, s.color)
        trace.steps.append({"position": pos, "star": s.to_json(), "edge": e})
        matching.append(e)
        used.update((e.u, e.v))
    return SolveResult("case3", k, Matching.of(matching), trace)


SOLVERS = {Case.CASE1: case1_solve, Case.CASE2: case2_solve, Case.CASE3: case3_solve}
