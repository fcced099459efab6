import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from rainbowmatch.graph import EdgeColoredGraph  # noqa: E402


@st.composite
def colored_graphs(draw, max_n=8, max_q=4):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14)) if pairs else []
    colors = draw(st.lists(st.integers(0, max_q - 1), min_size=len(chosen), max_size=len(chosen)))
    return EdgeColoredGraph.from_edges(n, [(u, v, c) for (u, v), c in zip(chosen, colors)])


@pytest.fixture
def triangle():
    return EdgeColoredGraph.from_edges(3, [(0, 1, 0), (1, 2, 1), (0, 2, 2)])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
