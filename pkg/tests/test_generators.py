import pytest
from hypothesis import given, settings, strategies as st

from rainbowmatch.generators import (
    GenSpec,
    InfeasibleError,
    color_classes_are_perfect_matchings,
    gen_cayley,
    gen_onefactorization,
    gen_proper_random,
    gen_random_mindeg,
    is_proper,
)
from rainbowmatch.graph import color_degree_profile, min_color_degree


@pytest.mark.parametrize("n", range(1, 7))
def test_cayley_shape(n):
    g = gen_cayley(n)
    assert g.n == 2 * n and g.m == n * n
    assert set(color_degree_profile(g).degrees) == {n}
    assert color_classes_are_perfect_matchings(g)
    assert g.colors == set(range(n))


def test_cayley_2_colors():
    g = gen_cayley(2)
    assert g.n == 4 and g.m == 4 and g.colors == {0, 1}


@pytest.mark.parametrize("m", range(2, 7))
def test_onefactorization(m):
    g = gen_onefactorization(m)
    assert g.n == 2 * m and g.m == m * (2 * m - 1)
    assert len(g.colors) == 2 * m - 1
    assert color_classes_are_perfect_matchings(g)
    assert min_color_degree(g) == 2 * m - 1


def test_invalid_parameters():
    with pytest.raises(ValueError):
        gen_cayley(0)
    with pytest.raises(ValueError):
        gen_onefactorization(1)
    with pytest.raises(InfeasibleError):
        gen_random_mindeg(3, 3, 3, 0.5, 0)
    with pytest.raises(ValueError):
        GenSpec("cayley", 0)


def test_random_example():
    g = gen_random_mindeg(39, 3, 10, 0.1, 7)
    assert min_color_degree(g) >= 3
    assert g == gen_random_mindeg(39, 3, 10, 0.1, 7)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 30), st.integers(1, 4), st.integers(0, 6), st.integers(0, 10**6))
def test_repair_only(n, k, extra, seed):
    try:
        g = gen_random_mindeg(n, k, k + extra, 0.0, seed)
    except InfeasibleError:
        return
    assert min_color_degree(g) >= k
    assert g.m <= n * k


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 30), st.integers(1, 4), st.sampled_from([0.0, 0.1, 0.3]), st.integers(0, 10**6))
def test_proper_random(n, k, p, seed):
    try:
        g = gen_proper_random(n, k, p, seed)
    except InfeasibleError:
        return
    assert is_proper(g)
    prof = color_degree_profile(g)
    assert all(prof[v] == g.degree(v) for v in range(n))
    assert prof.min_degree >= k
    assert g == gen_proper_random(n, k, p, seed)


def test_proper_example():
    g = gen_proper_random(20, 2, 0.3, 1)
    assert is_proper(g) and min_color_degree(g) >= 2


def test_genspec_build():
    assert GenSpec("cayley", 3).build() == gen_cayley(3)
    assert GenSpec("random", 18, k=2, p=0.1, q=6, seed=3).build() == gen_random_mindeg(18, 2, 6, 0.1, 3)
