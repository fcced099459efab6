from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from ..graph import Matching


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search could decide."""

    def __init__(self, best: Matching, nodes: int, budget: int):
        super().__init__(f"node budget {budget} exceeded; best matching so far has size {len(best)}")
        self.best = best
        self.nodes = nodes
        self.budget = budget

    @property
    def lower_bound(self) -> int:
        return len(self.best)


@dataclass
class SolveTrace:
    algorithm: str
    steps: list[dict] = field(default_factory=list)
    stages: list[dict] = field(default_factory=list)
    depth: int = 0
    fallback: bool = False
    info: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "algorithm": self.algorithm,
            "depth": self.depth,
            "fallback": self.fallback,
            "steps": _jsonable(self.steps),
        }
        if self.stages:
            out["stages"] = _jsonable(self.stages)
        if self.info:
            out["info"] = _jsonable(self.info)
        return out


@dataclass(frozen=True)
class SolveResult:
    algorithm: str
    k: int
    matching: Matching
    trace: SolveTrace
    nodes: int = 0

    @property
    def size(self) -> int:
        return len(self.matching)

    @property
    def succeeded(self) -> bool:
        return self.size >= self.k

    def to_json(self, with_trace: bool = True) -> dict:
        return {
            "algorithm": self.algorithm,
            "k": self.k,
            "size": self.size,
            "succeeded": self.succeeded,
            "matching": self.matching.to_json(),
            "trace": self.trace.to_json() if with_trace else {},
            "stats": {"nodes": self.nodes, "steps": len(self.trace.steps), "depth": self.trace.depth},
        }


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x
