"""Edge-colored simple graphs, matchings, color degrees and the instance format."""

from __future__ import annotations

import io
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Base class for malformed instances and invalid graph input."""


class InstanceParseError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GraphValidationError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownEdgeError(GraphError):
    def __init__(self, edge: "Edge"):
        super().__init__(f"unknown edge {edge.u} {edge.v} {edge.c}")
        self.edge = edge


class Edge(NamedTuple):
    u: int
    v: int
    c: int

    @classmethod
    def make(cls, u: int, v: int, c: int) -> "Edge":
        return cls(u, v, c) if u < v else cls(v, u, c)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def touches(self, x: int) -> bool:
        return x == self.u or x == self.v


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Simple undirected graph on vertices ``0..n-1`` with one color per edge.

    Build instances with :meth:`from_edges`, which normalizes ``u < v`` and
    validates simplicity. The dataclass is frozen; every "mutation" returns a
    new graph.
    """

    n: int
    edges: tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "EdgeColoredGraph":
        if n < 0:
            raise GraphValidationError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        out = []
        for u, v, c in edges:
            _check_edge(n, u, v, c, seen)
            out.append(Edge.make(u, v, c))
        out.sort()
        return cls(n, tuple(out))

    @cached_property
    def _incidence(self) -> list[list[Edge]]:
        inc: list[list[Edge]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.u].append(e)
            inc[e.v].append(e)
        return inc

    @cached_property
    def _pairs(self) -> dict[tuple[int, int], Edge]:
        return {(e.u, e.v): e for e in self.edges}

    @cached_property
    def colors(self) -> frozenset[int]:
        return frozenset(e.c for e in self.edges)

    @cached_property
    def color_classes(self) -> dict[int, tuple[Edge, ...]]:
        classes: dict[int, list[Edge]] = defaultdict(list)
        for e in self.edges:
            classes[e.c].append(e)
        return {c: tuple(es) for c, es in sorted(classes.items())}

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> list[Edge]:
        return self._incidence[v]

    def degree(self, v: int) -> int:
        return len(self._incidence[v])

    def color_degree(self, v: int) -> int:
        return len({e.c for e in self._incidence[v]})

    def edge_between(self, u: int, v: int) -> Edge | None:
        return self._pairs.get((u, v) if u < v else (v, u))

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 3:
            return False
        u, v, c = e
        found = self.edge_between(u, v)
        return found is not None and found.c == c

    def without_edges(self, removed: Iterable[Edge]) -> "EdgeColoredGraph":
        drop = set(removed)
        return EdgeColoredGraph(self.n, tuple(e for e in self.edges if e not in drop))

    def restricted_to(self, kept: Iterable[Edge]) -> "EdgeColoredGraph":
        keep = set(kept)
        return EdgeColoredGraph(self.n, tuple(e for e in self.edges if e in keep))


def _check_edge(n: int, u: int, v: int, c: int, seen: set, line: int | None = None) -> None:
    if u == v:
        raise GraphValidationError(f"self-loop at vertex {u}", line)
    if not (0 <= u < n and 0 <= v < n):
        raise GraphValidationError(f"vertex id out of range in edge {u} {v} (n={n})", line)
    if c < 0:
        raise GraphValidationError(f"negative color {c}", line)
    key = (u, v) if u < v else (v, u)
    if key in seen:
        raise GraphValidationError(f"duplicate vertex pair {key[0]} {key[1]}", line)
    seen.add(key)


@dataclass(frozen=True)
class Matching:
    edges: tuple[Edge, ...] = ()

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int, int]]) -> "Matching":
        return cls(tuple(sorted(Edge.make(*e) for e in edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in (e.u, e.v)}

    @property
    def colors(self) -> set[int]:
        return {e.c for e in self.edges}

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


@dataclass(frozen=True)
class ColorDegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int = field(init=False)
    max_degree: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "min_degree", min(self.degrees, default=0))
        object.__setattr__(self, "max_degree", max(self.degrees, default=0))

    def __getitem__(self, v: int) -> int:
        return self.degrees[v]


def color_degree_profile(graph: EdgeColoredGraph) -> ColorDegreeProfile:
    seen: list[set[int]] = [set() for _ in range(graph.n)]
    for e in graph.edges:
        seen[e.u].add(e.c)
        seen[e.v].add(e.c)
    return ColorDegreeProfile(tuple(len(s) for s in seen))


def min_color_degree(graph: EdgeColoredGraph) -> int:
    return color_degree_profile(graph).min_degree


def is_rainbow_matching(
    graph: EdgeColoredGraph, matching: Iterable[tuple[int, int, int]]
) -> tuple[bool, str | None]:
    """Check that ``matching`` is vertex-disjoint and color-distinct in ``graph``.

    Returns ``(ok, report)`` where ``report`` names the first violating pair.
    Raises :class:`UnknownEdgeError` for an edge that is not in the graph with
    exactly that color.
    """
    edges = [Edge.make(*e) for e in matching]
    for e in edges:
        if e not in graph:
            raise UnknownEdgeError(e)
    by_vertex: dict[int, Edge] = {}
    by_color: dict[int, Edge] = {}
    for e in edges:
        for x in (e.u, e.v):
            if x in by_vertex:
                f = by_vertex[x]
                return False, f"shared vertex {x}: edges {_fmt(f)} and {_fmt(e)}"
            by_vertex[x] = e
        if e.c in by_color:
            f = by_color[e.c]
            return False, f"repeated color {e.c}: edges {_fmt(f)} and {_fmt(e)}"
        by_color[e.c] = e
    return True, None


def _fmt(e: Edge) -> str:
    return f"({e.u} {e.v} {e.c})"


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(lineno: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise InstanceParseError(lineno, f"expected {count} integers, got {len(parts)}")
    try:
        return [int(p, 10) for p in parts]
    except ValueError:
        raise InstanceParseError(lineno, f"non-integer token in {line!r}") from None


def load_instance(text: str | bytes) -> EdgeColoredGraph:
    """Parse an instance: ``n m`` header then ``m`` lines of ``u v c``."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _data_lines(text)
    header = next(lines, None)
    if header is None:
        raise InstanceParseError(1, "missing 'n m' header")
    n, m = _ints(*header, 2)
    if n < 0 or m < 0:
        raise InstanceParseError(header[0], "negative n or m")
    seen: set[tuple[int, int]] = set()
    edges = []
    last = header[0]
    for lineno, line in lines:
        if len(edges) == m:
            raise InstanceParseError(lineno, f"more than {m} edge lines")
        u, v, c = _ints(lineno, line, 3)
        _check_edge(n, u, v, c, seen, lineno)
        edges.append(Edge.make(u, v, c))
        last = lineno
    if len(edges) != m:
        raise InstanceParseError(last + 1, f"expected {m} edge lines, got {len(edges)}")
    edges.sort()
    return EdgeColoredGraph(n, tuple(edges))


def save_instance(graph: EdgeColoredGraph, comments: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    buf.write(f"{graph.n} {graph.m}\n")
    for e in graph.edges:
        buf.write(f"{e.u} {e.v} {e.c}\n")
    return buf.getvalue()


def load_matching(text: str | bytes) -> list[Edge]:
    """Parse a matching file: one ``u v c`` row per edge, ``#`` comments allowed."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return [Edge.make(*_ints(lineno, line, 3)) for lineno, line in _data_lines(text)]
