"""Command line: ``rainbowmatch gen | solve | verify | experiment``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .experiment import ALGORITHMS, ExperimentConfig, parse_k_range, run_experiment, theorem_violations, write_csv
from .generators import FAMILIES, GenSpec, InfeasibleError
from .graph import GraphError, UnknownEdgeError, is_rainbow_matching, load_instance, load_matching, min_color_degree, save_instance
from .solvers import BudgetExceeded, DEFAULT_BUDGET, exact_find, greedy_baseline, pipeline_solve
from .solvers.cases import NoWitnessError, case1_solve, case2_solve, case3_solve
from .structure import PreconditionError, classify_case, orient, partition, reduce_to_critical, star_decomposition
from .weights import compute_w1, compute_w2, compute_w3

EXIT_OK, EXIT_FAIL, EXIT_IO, EXIT_BUDGET = 0, 1, 2, 3
SOLVE_ALGORITHMS = ("pipeline", "exact", "greedy", "case1", "case2", "case3")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.family, args.n, k=args.k, p=args.p, q=args.q if args.q is not None else 3 * args.k,
                       seed=args.seed)
        graph = spec.build()
    except (ValueError, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    _emit(save_instance(graph, [f"rainbowmatch {__version__} gen {spec.describe()}"]), args.output)
    return EXIT_OK


def _case_solve(graph, alg: str, k: int, seed: int):
    reduced, _ = reduce_to_critical(graph, k)
    orientation = orient(reduced, star_decomposition(reduced), seed)
    part = partition(reduced, orientation)
    if alg == "case1":
        return case1_solve(reduced, part, compute_w1(reduced, part), k)
    if alg == "case2":
        return case2_solve(reduced, orientation, compute_w2(orientation), k)
    return case3_solve(reduced, part, compute_w3(part), k)


def _artifacts(graph, k: int, seed: int) -> dict:
    reduced, log = reduce_to_critical(graph, k)
    decomp = star_decomposition(reduced)
    orientation = orient(reduced, decomp, seed)
    part = partition(reduced, orientation)
    return {
        "deletions": [d.to_json() for d in log],
        "orientation": orientation.to_json(),
        "partition": part.to_json(),
        "case": classify_case(part, graph.n, k).to_json(),
        "weights": {
            "w1": compute_w1(reduced, part).to_json(),
            "w2": compute_w2(orientation).to_json(),
            "w3": compute_w3(part).to_json(),
        },
    }


def cmd_solve(args) -> int:
    try:
        graph = load_instance(Path(args.instance).read_bytes())
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    k = args.k if args.k is not None else min_color_degree(graph)
    try:
        if args.alg == "pipeline":
            res = pipeline_solve(graph, k, args.budget, seed=args.seed)
        elif args.alg == "exact":
            res = exact_find(graph, k, args.budget)
        elif args.alg == "greedy":
            res = greedy_baseline(graph, k)
        else:
            res = _case_solve(graph, args.alg, k, args.seed)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NoWitnessError as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok, report = is_rainbow_matching(graph, res.matching)
    if not ok:
        print(f"error: solver returned an invalid matching: {report}", file=sys.stderr)
        return EXIT_FAIL
    _emit(_dump(res.to_json()), args.output)
    if args.trace:
        trace = {"result": res.to_json()}
        if k >= 1 and min_color_degree(graph) >= k:
            trace["structure"] = _artifacts(graph, k, args.seed)
        Path(args.trace).write_text(_dump(trace))
    return EXIT_OK if res.succeeded else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        graph = load_instance(Path(args.instance).read_bytes())
        matching = load_matching(Path(args.matching).read_bytes())
    except (OSError, GraphError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        ok, report = is_rainbow_matching(graph, matching)
    except UnknownEdgeError as exc:
        print(f"invalid: {exc}")
        return EXIT_FAIL
    if not ok:
        print(f"invalid: {report}")
        return EXIT_FAIL
    print(f"valid rainbow matching of size {len(matching)}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    try:
        config = ExperimentConfig(
            k_values=parse_k_range(args.k),
            trials=args.trials,
            n=args.n,
            family=args.family,
            q=args.q,
            p=args.p,
            algorithms=tuple(a.strip() for a in args.algs.split(",") if a.strip()),
            seed=args.seed,
            budget=args.budget,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    report = run_experiment(config)
    text = _dump(report)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        write_csv(report, args.csv)
    summary = report["summary"]
    for key, g in summary["groups"].items():
        print(f"{key}: {g['successes']}/{g['runs']}", file=sys.stderr)
    bad = theorem_violations(report["rows"])
    if bad or summary["no_case_rows"] or summary["unverified_rows"]:
        for row in bad:
            print(f"theorem property failed: k={row['k']} n={row['n']} seed={row['seed']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    common.add_argument("--trace", metavar="PATH", help="write a detailed JSON trace here")
    common.add_argument("-o", "--output", metavar="PATH", help="output file (default stdout)")

    parser = argparse.ArgumentParser(prog="rainbowmatch", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate an instance")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--n", type=int, required=True, help="vertices; Z_n order for cayley; m for onefactorization")
    g.add_argument("--k", type=int, default=0, help="minimum color degree to repair to")
    g.add_argument("--q", type=int, default=None, help="number of colors (random family, default 3k)")
    g.add_argument("--p", type=float, default=0.0, help="edge probability")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="find a rainbow matching of size k")
    s.add_argument("instance")
    s.add_argument("--alg", choices=SOLVE_ALGORITHMS, default="pipeline")
    s.add_argument("--k", type=int, default=None, help="target size (default: minimum color degree)")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", parents=[common], help="check a matching file against an instance")
    v.add_argument("instance")
    v.add_argument("matching")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", parents=[common], help="batch runs at n > 4.25k^2")
    e.add_argument("--k", default="2..3", help="k values: 3, 2..4 or 1,3")
    e.add_argument("--trials", type=int, default=100)
    e.add_argument("--n", type=int, default=None, help="override n (default floor(4.25k^2)+1)")
    e.add_argument("--family", choices=("random", "proper-random"), default="random")
    e.add_argument("--q", type=int, default=None, help="colors (default 3k)")
    e.add_argument("--p", type=float, default=0.1)
    e.add_argument("--algs", default="pipeline", help=f"comma list from {','.join(ALGORITHMS)}")
    e.add_argument("--csv", metavar="PATH", help="also write a flat CSV")
    e.add_argument("--jobs", type=int, default=1)
    e.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
