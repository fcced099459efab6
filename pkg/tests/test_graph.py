import pytest
from hypothesis import given

from conftest import colored_graphs
from rainbowmatch.graph import (
    Edge,
    EdgeColoredGraph,
    GraphValidationError,
    InstanceParseError,
    UnknownEdgeError,
    color_degree_profile,
    is_rainbow_matching,
    load_instance,
    load_matching,
    save_instance,
)
from rainbowmatch.generators import gen_cayley


def test_load_triangle():
    g = load_instance("3 3\n0 1 0\n1 2 1\n0 2 2\n")
    assert g.n == 3
    assert g.edges == (Edge(0, 1, 0), Edge(0, 2, 2), Edge(1, 2, 1))
    assert g.colors == {0, 1, 2}


def test_self_loop_reports_line():
    with pytest.raises(GraphValidationError, match="line 2: self-loop"):
        load_instance("2 1\n0 0 0\n")


def test_monochromatic_matching():
    g = load_instance(b"4 2\n0 1 5\n2 3 5\n")
    assert g.colors == {5}
    assert g.m == 2


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("3 2\n0 1 0\n1 0 3\n", GraphValidationError, 3),
        ("3 1\n0 3 0\n", GraphValidationError, 2),
        ("3 1\n0 1\n", InstanceParseError, 2),
        ("3 1\n0 x 1\n", InstanceParseError, 2),
        ("3 2\n0 1 1\n", InstanceParseError, 3),
        ("3 1\n0 1 1\n1 2 1\n", InstanceParseError, 3),
        ("# only a comment\n", InstanceParseError, 1),
    ],
)
def test_malformed(text, exc, line):
    with pytest.raises(exc) as info:
        load_instance(text)
    assert info.value.line == line


def test_comments_and_reversed_pairs_normalize():
    g = load_instance("# hello\n3 2\n# mid\n2 0 7\n1 0 4\n")
    assert g.edges == (Edge(0, 1, 4), Edge(0, 2, 7))
    assert save_instance(g) == "3 2\n0 1 4\n0 2 7\n"


@given(colored_graphs())
def test_round_trip(g):
    text = save_instance(g)
    assert load_instance(text) == g
    assert save_instance(load_instance(text)) == text


def test_color_degree_examples(triangle):
    prof = color_degree_profile(triangle)
    assert prof.degrees == (2, 2, 2) and prof.min_degree == 2
    star = EdgeColoredGraph.from_edges(4, [(0, 1, 9), (0, 2, 9), (0, 3, 9)])
    assert color_degree_profile(star).degrees == (1, 1, 1, 1)
    # Z_4 table: each row and column holds 4 distinct symbols.
    prof = color_degree_profile(gen_cayley(4))
    assert set(prof.degrees) == {4} and prof.min_degree == 4


def test_isolated_vertex_has_zero():
    g = EdgeColoredGraph.from_edges(3, [(0, 1, 0)])
    assert color_degree_profile(g).degrees == (1, 1, 0)


@given(colored_graphs())
def test_profile_bounds(g):
    prof = color_degree_profile(g)
    for v in range(g.n):
        assert 0 <= prof[v] <= g.degree(v)
    assert prof.min_degree <= prof.max_degree <= max((g.degree(v) for v in range(g.n)), default=0)
    assert prof.min_degree <= len(g.colors)


@given(colored_graphs())
def test_removing_an_edge_changes_only_its_ends(g):
    before = color_degree_profile(g).degrees
    for e in g.edges:
        after = color_degree_profile(g.without_edges([e])).degrees
        for v in range(g.n):
            if v in (e.u, e.v):
                assert before[v] - after[v] in (0, 1)
            else:
                assert before[v] == after[v]


def test_rainbow_checks(triangle):
    assert is_rainbow_matching(triangle, [(0, 1, 0)]) == (True, None)
    ok, report = is_rainbow_matching(triangle, [(0, 1, 0), (1, 2, 1)])
    assert not ok and "shared vertex 1" in report
    mono = load_instance("4 2\n0 1 5\n2 3 5\n")
    ok, report = is_rainbow_matching(mono, [(0, 1, 5), (2, 3, 5)])
    assert not ok and "repeated color 5" in report


def test_unknown_edge(triangle):
    with pytest.raises(UnknownEdgeError):
        is_rainbow_matching(triangle, [(0, 1, 1)])
    with pytest.raises(UnknownEdgeError):
        is_rainbow_matching(triangle, [(0, 3, 0)])


def test_load_matching():
    assert load_matching("# m\n1 0 0\n\n2 3 1\n") == [Edge(0, 1, 0), Edge(2, 3, 1)]
