"""The full constructive pipeline with exact fallback."""

from __future__ import annotations

from ..graph import EdgeColoredGraph, Matching, is_rainbow_matching, min_color_degree
from ..structure import (
    Case,
    PreconditionError,
    classify_case,
    orient,
    partition,
    reduce_to_critical,
    star_decomposition,
)
from ..weights import compute_w1, compute_w2, compute_w3
from .cases import NoWitnessError, case1_solve, case2_solve, case3_solve
from .exact import DEFAULT_BUDGET, exact_find
from .result import SolveResult, SolveTrace


def pipeline_solve(
    graph: EdgeColoredGraph,
    k: int,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    keep_artifacts: bool = False,
) -> SolveResult:
    """Reduce, orient, classify, run the matching case construction(s), then fall
    back to the exact search if none reached ``k``.

    Case constructions are tried in order over every case whose inequality
    holds. Any matching they return is re-checked against the input graph.
    With ``keep_artifacts`` the trace also carries the deletion log,
    orientation, partition and weight maps.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    trace = SolveTrace("pipeline")
    if k == 0:
        return SolveResult("pipeline", 0, Matching(), trace)
    delta = min_color_degree(graph)
    if delta < k:
        raise PreconditionError(f"minimum color degree {delta} < k={k}")

    reduced, log = reduce_to_critical(graph, k)
    trace.stages.append({"stage": "reduce", "deleted": len(log), "edges_left": reduced.m})
    decomp = star_decomposition(reduced)
    orientation = orient(reduced, decomp, seed)
    part = partition(reduced, orientation)
    label = classify_case(part, graph.n, k)
    trace.stages.append({"stage": "orient", "moves": orientation.moves_applied})
    trace.stages.append({"stage": "classify", **label.to_json()})
    trace.info["case"] = label.case.value
    if keep_artifacts:
        trace.info["deletions"] = log
        trace.info["orientation"] = orientation.to_json()
        trace.info["partition"] = part.to_json()

    best = Matching()
    for case in label.applicable:
        try:
            if case is Case.CASE1:
                w1 = compute_w1(reduced, part)
                res = case1_solve(reduced, part, w1, k)
                weights = w1
            elif case is Case.CASE2:
                w2 = compute_w2(orientation)
                res = case2_solve(reduced, orientation, w2, k)
                weights = w2
            else:
                w3 = compute_w3(part)
                res = case3_solve(reduced, part, w3, k)
                weights = w3
        except NoWitnessError as exc:
            trace.stages.append({"stage": case.value, "error": str(exc)})
            continue
        ok, report = is_rainbow_matching(graph, res.matching)
        if not ok:
            raise AssertionError(f"{case.value} produced an invalid matching: {report}")
        stage = {"stage": case.value, "size": res.size, "succeeded": res.succeeded}
        if keep_artifacts:
            stage["weights"] = weights
        trace.stages.append(stage)
        trace.steps.extend({"case": case.value, **s} for s in res.trace.steps)
        if res.size > len(best):
            best = res.matching
        if res.succeeded:
            trace.info["solved_by"] = case.value
            return SolveResult("pipeline", k, res.matching, trace)

    trace.fallback = True
    res = exact_find(graph, k, budget)
    trace.stages.append({"stage": "exact", "size": res.size, "nodes": res.nodes})
    trace.info["solved_by"] = "exact" if res.succeeded else None
    matching = res.matching if res.size >= len(best) else best
    return SolveResult("pipeline", k, matching, trace, res.nodes)
