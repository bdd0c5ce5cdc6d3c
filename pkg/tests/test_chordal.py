import pytest
from hypothesis import given, settings

from conftest import brute_gaps, brute_is_chordal, graphs, trees
from sqtree.chordal import (
    find_gap,
    has_linear_resolution,
    is_chordal,
    is_cochordal,
    is_gap_free,
    is_perfect_elimination_order,
    perfect_elimination_order,
)
from sqtree.errors import ZeroIdealError
from sqtree.graph import Graph, complement, cycle_graph, diameter, distances, path_graph, square


def test_small_examples():
    assert is_chordal(path_graph(6))
    assert not is_chordal(cycle_graph(4))
    assert is_chordal(cycle_graph(3))
    assert is_cochordal(cycle_graph(4))
    assert not is_cochordal(cycle_graph(5))
    assert find_gap(cycle_graph(4)) is None
    assert find_gap(Graph(4, [(1, 2), (3, 4)])) == ((1, 2), (3, 4))


def test_path_square_gap_appears_at_six():
    assert find_gap(square(path_graph(5))) is None
    assert find_gap(square(path_graph(6))) == ((1, 2), (5, 6))


def test_linear_resolution_rejects_zero_ideal():
    with pytest.raises(ZeroIdealError):
        has_linear_resolution(Graph(3))


@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_chordality_matches_induced_cycle_search(g):
    assert is_chordal(g) == brute_is_chordal(g)
    peo = perfect_elimination_order(g)
    if peo is not None:
        assert peo.perfect
        assert is_perfect_elimination_order(g, peo.order)


@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_find_gap_is_smallest_induced_2k2(g):
    gaps = brute_gaps(g)
    assert find_gap(g) == (min(gaps) if gaps else None)


@given(graphs(max_n=8))
@settings(max_examples=200, deadline=None)
def test_cochordal_implies_gap_free(g):
    # a gap in G is an induced C4 in the complement
    if is_cochordal(g):
        assert is_gap_free(g)
    assert is_cochordal(g) == is_chordal(complement(g))


@given(trees(min_n=2, max_n=12))
@settings(max_examples=150, deadline=None)
def test_tree_square_is_chordal(t):
    assert is_chordal(square(t))


@given(trees(min_n=2, max_n=12))
@settings(max_examples=150, deadline=None)
def test_linear_square_forces_small_diameter(t):
    if has_linear_resolution(square(t)):
        assert diameter(t) <= 4


@given(trees(min_n=3, max_n=12))
@settings(max_examples=150, deadline=None)
def test_linear_square_forbids_two_far_high_degree_vertices(t):
    # two vertices of degree >= 3 at distance >= 3 produce a gap in T^2
    d = distances(t)
    big = [v for v in t.vertices if t.degree(v) >= 3]
    far = any(d(u, v) >= 3 for u in big for v in big)
    if far:
        assert not is_gap_free(square(t))


def test_bad_elimination_order_rejected():
    assert not is_perfect_elimination_order(cycle_graph(4), [1, 2, 3, 4])
    assert not is_perfect_elimination_order(path_graph(3), [1, 2])


@given(trees(min_n=4, max_n=12))
@settings(max_examples=200, deadline=None)
def test_diameter_three_linear_square_has_one_branch_vertex(t):
    if diameter(t) == 3 and has_linear_resolution(square(t)):
        assert sum(1 for v in t.vertices if t.degree(v) >= 3) <= 1
