"""Batch experiments checking the large-n rainbow matching guarantee."""

from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .generators import GenSpec
from .graph import is_rainbow_matching, min_color_degree
from .solvers import BudgetExceeded, DEFAULT_BUDGET, exact_find, greedy_baseline, pipeline_solve
from .structure import hypothesis_holds

SCHEMA = 1
ALGORITHMS = ("pipeline", "greedy", "exact")


def default_n(k: int) -> int:
    """Smallest n with n > 4.25 k^2 (18 for k=2, 39 for k=3)."""
    return 17 * k * k // 4 + 1


def parse_k_range(text: str) -> list[int]:
    """Accept ``3``, ``2..4`` or ``1,3,5``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out or any(k < 0 for k in out):
        raise ValueError(f"bad k range {text!r}")
    return out


@dataclass
class ExperimentConfig:
    k_values: list[int]
    trials: int = 100
    n: int | None = None
    family: str = "random"
    q: int | None = None
    p: float = 0.1
    algorithms: tuple[str, ...] = ("pipeline",)
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    jobs: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.family not in ("random", "proper-random"):
            raise ValueError("experiments use the random or proper-random family")
        unknown = set(self.algorithms) - set(ALGORITHMS)
        if unknown:
            raise ValueError(f"unknown algorithms: {sorted(unknown)}")

    def n_for(self, k: int) -> int:
        return self.n if self.n is not None else default_n(k)

    def spec_for(self, k: int, trial: int) -> GenSpec:
        q = self.q if self.q is not None else max(3 * k, 1)
        return GenSpec(self.family, self.n_for(k), k=k, p=self.p, q=q, seed=self.seed + trial)


def _run(alg: str, graph, k: int, budget: int, seed: int):
    if alg == "pipeline":
        return pipeline_solve(graph, k, budget, seed=seed)
    if alg == "greedy":
        return greedy_baseline(graph, k)
    return exact_find(graph, k, budget)


def run_trial(config: ExperimentConfig, k: int, trial: int) -> list[tuple[dict, float]]:
    spec = config.spec_for(k, trial)
    graph = spec.build()
    delta = min_color_degree(graph)
    rows = []
    for alg in config.algorithms:
        start = time.perf_counter()
        row = {
            "k": k,
            "n": graph.n,
            "m": graph.m,
            "generator": spec.family,
            "seed": spec.seed,
            "algorithm": alg,
            "min_color_degree": delta,
            "hypothesis": hypothesis_holds(graph.n, k) and delta >= k,
        }
        try:
            res = _run(alg, graph, k, config.budget, config.seed)
        except BudgetExceeded as exc:
            ok, _ = is_rainbow_matching(graph, exc.best)
            row.update(size=len(exc.best), succeeded=False, verified=ok, case=None,
                       fallback=None, nodes=exc.nodes, budget_exceeded=True)
        else:
            ok, _ = is_rainbow_matching(graph, res.matching)
            row.update(
                size=res.size,
                succeeded=res.succeeded and ok,
                verified=ok,
                case=res.trace.info.get("case"),
                fallback=res.trace.fallback if alg == "pipeline" else None,
                nodes=res.nodes,
                budget_exceeded=False,
            )
        rows.append((row, time.perf_counter() - start))
    return rows


def _run_packed(args):
    return run_trial(*args)


def run_experiment(config: ExperimentConfig) -> dict:
    """Run every (k, trial) pair and assemble the report in (k, trial) order."""
    jobs = [(config, k, t) for k in config.k_values for t in range(config.trials)]
    start = time.perf_counter()
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(_run_packed, jobs, chunksize=4))
    else:
        results = [_run_packed(j) for j in jobs]
    rows, seconds = [], []
    for trial_rows in results:
        for row, dt in trial_rows:
            rows.append(row)
            seconds.append(round(dt, 6))
    return {
        "schema": SCHEMA,
        "config": {**asdict(config), "algorithms": list(config.algorithms), "n_rule": "floor(4.25k^2)+1"},
        "rows": rows,
        "summary": summarize(rows),
        "runtime": {"total_seconds": round(time.perf_counter() - start, 6), "row_seconds": seconds},
    }


def summarize(rows: list[dict]) -> dict:
    groups: dict[str, dict] = {}
    for row in rows:
        key = f"k={row['k']}/{row['algorithm']}"
        g = groups.setdefault(key, {"runs": 0, "successes": 0})
        g["runs"] += 1
        g["successes"] += bool(row["succeeded"])
    for g in groups.values():
        g["success_rate"] = g["successes"] / g["runs"]
    violations = theorem_violations(rows)
    return {
        "groups": groups,
        "theorem_rows": sum(1 for r in rows if r["algorithm"] == "pipeline" and r["hypothesis"]),
        "theorem_violations": len(violations),
        "no_case_rows": sum(1 for r in rows if r.get("case") == "none"),
        "unverified_rows": sum(1 for r in rows if not r["verified"]),
    }


def theorem_violations(rows: list[dict]) -> list[dict]:
    return [r for r in rows if r["algorithm"] == "pipeline" and r["hypothesis"] and not r["succeeded"]]


CSV_FIELDS = ["k", "n", "m", "generator", "seed", "algorithm", "min_color_degree", "hypothesis",
              "size", "succeeded", "verified", "case", "fallback", "nodes", "budget_exceeded"]


def write_csv(report: dict, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(report["rows"])
