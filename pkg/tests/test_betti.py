import pytest
from hypothesis import given, settings

from conftest import graphs
from sqtree.betti import (
    BettiTable,
    SimplicialComplex,
    euler_characteristic,
    exact_rank,
    format_betti_table,
    hochster_betti,
    hochster_report,
    independence_complex,
    reduced_homology_ranks,
    reg_pd_depth,
)
from sqtree.errors import CapExceededError, SqtreeError
from sqtree.graph import Graph, complete_graph, cycle_graph, path_graph, relabel, square
from sqtree.invariants import induced_matching_number


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[2, 3, 5], [4, 1, 0], [6, 4, 5]]) == 2
    assert exact_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_independence_complex_faces():
    c = independence_complex(path_graph(3))
    assert c.face_sets(-1) == [()]
    assert c.face_sets(0) == [(1,), (2,), (3,)]
    assert c.face_sets(1) == [(1, 3)]
    assert c.dimension == 1


def test_reduced_homology_examples():
    # Ind(K_3) is three points: H~_0 has rank 2
    assert reduced_homology_ranks(independence_complex(complete_graph(3))) == [0, 2]
    # Ind(C_4) is two disjoint edges; Ind(C_5) is a pentagon circle
    assert reduced_homology_ranks(independence_complex(cycle_graph(4))) == [0, 1, 0]
    assert reduced_homology_ranks(independence_complex(cycle_graph(5))) == [0, 0, 1]
    # the empty complex has H~_{-1} = Q
    assert reduced_homology_ranks(SimplicialComplex(0, ((0,),))) == [1]
    with pytest.raises(SqtreeError):
        reduced_homology_ranks(SimplicialComplex(0, ()))


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_euler_characteristic_matches_homology(g):
    c = independence_complex(g)
    ranks = reduced_homology_ranks(c)
    assert euler_characteristic(c) == sum((-1) ** (k - 1) * r for k, r in enumerate(ranks))


def test_cycle_tables():
    assert hochster_betti(cycle_graph(4)).entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    t = hochster_betti(cycle_graph(5))
    assert t.entries == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert reg_pd_depth(hochster_betti(cycle_graph(4))) == (1, 3, 1)


def test_path_square_oracle():
    t = hochster_betti(square(path_graph(7)))
    assert (t.reg, t.projdim, t.depth) == (2, 5, 2)


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=60, deadline=None)
def test_oracle_relabel_invariant(g):
    perm = list(reversed(g.vertices))
    assert hochster_betti(relabel(g, perm)).entries == hochster_betti(g).entries


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=60, deadline=None)
def test_alternating_sum_of_betti_numbers_vanishes(g):
    # the Hilbert series numerator of S/I vanishes at t = 1 unless I = 0
    t = hochster_betti(g)
    s = sum((-1) ** i * v for (i, _), v in t.entries.items())
    assert s == (1 if g.m == 0 else 0)


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=60, deadline=None)
def test_first_row_counts_edges_and_bounds_hold(g):
    t = hochster_betti(g)
    assert t[(1, 2)] == g.m
    assert t.reg >= induced_matching_number(g)[0]


def test_hochster_report_tags_oracle():
    r = hochster_report(cycle_graph(5))
    assert r.provenance["reg"] == "oracle"
    assert (r.reg, r.projdim_SI, r.depth, r.linear_resolution) == (2, 3, 2, False)


def test_format_betti_table():
    text = format_betti_table(hochster_betti(cycle_graph(4)))
    assert text.splitlines() == [
        "Betti table of S/I(G), n=4, over QQ",
        "i\\j-i   0  1",
        "0       1  .",
        "1       .  4",
        "2       .  4",
        "3       .  1",
        "total 1 4 4 1",
    ]


def test_table_accessors():
    t = BettiTable(4, {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1})
    assert t[(2, 5)] == 0
    assert t.totals() == [1, 4, 4, 1]
    assert t.depth == 1


def test_oracle_cap():
    with pytest.raises(CapExceededError):
        hochster_betti(path_graph(13))
    with pytest.raises(CapExceededError):
        independence_complex(Graph(20))
