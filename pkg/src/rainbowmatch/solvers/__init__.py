from .cases import NoWitnessError, case1_solve, case2_solve, case3_solve, components
from .exact import DEFAULT_BUDGET, exact_find, exact_max
from .greedy import greedy_baseline
from .pipeline import pipeline_solve
from .result import BudgetExceeded, SolveResult, SolveTrace

__all__ = [
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "NoWitnessError",
    "SolveResult",
    "SolveTrace",
    "case1_solve",
    "case2_solve",
    "case3_solve",
    "components",
    "exact_find",
    "exact_max",
    "greedy_baseline",
    "pipeline_solve",
]
