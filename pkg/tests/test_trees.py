import pytest
from hypothesis import given, settings

from conftest import trees
from sqtree.chordal import is_cochordal
from sqtree.errors import NotATreeError, SqtreeError
from sqtree.graph import Graph, complete_graph, cycle_graph, path_graph, square, star_graph
from sqtree.invariants import d_prime, induced_matching_number, max_independent_set
from sqtree.trees import (
    classification_verdict,
    classify_tree,
    double_broom,
    double_broom_formulas,
    double_star,
    harary_ross_check,
    linear_resolution_by_classification,
    path_formulas,
    whiskered_star,
)

EXAMPLE = Graph(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)])


def test_constructors():
    ws = whiskered_star(3, 2)
    assert ws.sorted_edges() == [(1, 2), (1, 3), (1, 4), (2, 5), (3, 6)]
    db = double_broom(3, 4, 2)
    assert db.n == 7
    assert db.sorted_edges() == [(1, 2), (1, 5), (1, 6), (2, 3), (3, 4), (4, 7)]
    assert double_star(2, 2).sorted_edges() == [(1, 2), (1, 3), (2, 4)]
    assert str(classify_tree(double_star(2, 2))) == "Path(4)"
    with pytest.raises(SqtreeError):
        whiskered_star(2, 3)
    with pytest.raises(SqtreeError):
        double_broom(1, 3, 2)


@pytest.mark.parametrize("t, label, linear", [
    (path_graph(2), "Path(2)", True),
    (path_graph(5), "Path(5)", True),
    (path_graph(6), "Path(6)", False),
    (star_graph(4), "Star(4)", True),
    (whiskered_star(3, 1), "PartiallyWhiskeredStar(3,1)", True),
    (whiskered_star(4, 4), "PartiallyWhiskeredStar(4,4)", True),
    (EXAMPLE, "DoubleBroom(2,2,2)", False),
    (double_broom(3, 5, 4), "DoubleBroom(2,5,3)", False),
    (Graph(7, [(1, 2), (1, 3), (1, 4), (2, 5), (5, 6), (5, 7)]), "DoubleBroom(2,3,2)", False),
    (Graph(8, [(1, 2), (2, 5), (5, 6), (2, 7), (7, 8), (2, 3), (3, 4)]), "PartiallyWhiskeredStar(4,3)", True),
    (Graph(8, [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7), (7, 8)]), "Other", False),
])
def test_classification_examples(t, label, linear):
    assert str(classify_tree(t)) == label
    assert linear_resolution_by_classification(t) == linear


def test_classification_requires_tree():
    with pytest.raises(NotATreeError):
        classify_tree(cycle_graph(4))
    with pytest.raises(SqtreeError):
        linear_resolution_by_classification(Graph(1))


@given(trees(min_n=2, max_n=12))
@settings(max_examples=200, deadline=None)
def test_classification_matches_cochordality(t):
    cls, linear, why = classification_verdict(t)
    assert linear == is_cochordal(square(t))
    assert why


@given(trees(min_n=2, max_n=12))
@settings(max_examples=100, deadline=None)
def test_double_broom_witness_is_consistent(t):
    c = classify_tree(t)
    if c.kind == "DoubleBroom":
        a, k, b = c.params
        assert a + b + k == t.n
        assert a >= 1 and b >= 1 and k >= 2


def test_harary_ross_on_path_square():
    ok, verdicts = harary_ross_check(square(path_graph(4)))
    assert ok
    assert [name for name, _, _ in verdicts] == ["a", "b", "c", "d", "e"]


def test_harary_ross_rejects_non_squares():
    assert not harary_ross_check(cycle_graph(5))[0]
    assert not harary_ross_check(path_graph(5))[0]
    with pytest.raises(SqtreeError):
        harary_ross_check(complete_graph(4))


@given(trees(min_n=4, max_n=10))
@settings(max_examples=100, deadline=None)
def test_harary_ross_accepts_tree_squares(t):
    if any(t.degree(v) == t.n - 1 for v in t.vertices):
        return
    assert harary_ross_check(square(t))[0]


@pytest.mark.parametrize("n", range(3, 16))
def test_path_formulas_against_search(n):
    f = path_formulas(n)
    g = square(path_graph(n))
    assert f.dim == max_independent_set(g)[0]
    assert f.indmat == f.reg == induced_matching_number(g)[0]
    assert f.d_prime == f.projdim_SI == d_prime(g)[0]
    assert f.depth == n - f.projdim_SI
    assert f.linear_resolution == (n <= 5)


def test_path_formula_hand_values():
    f = path_formulas(9)
    assert (f.dim, f.reg, f.projdim_SI, f.depth) == (3, 2, 7, 2)
    with pytest.raises(SqtreeError):
        path_formulas(2)


def test_double_broom_formula_pieces():
    assert double_broom_formulas(3, 5, 3).projdim_SI == 7
    assert double_broom_formulas(2, 2, 2).projdim_SI == 3
    assert double_broom_formulas(2, 3, 2).projdim_SI == 4
    assert double_broom_formulas(2, 9, 2).depth == 3
    assert double_broom_formulas(2, 3, 2).dim is None
    assert double_broom_formulas(2, 4, 2).dim == 2
    assert double_broom_formulas(2, 7, 2).dim == 3


@pytest.mark.parametrize("n1, k, n2", [(2, 2, 3), (3, 3, 2), (4, 6, 2), (2, 9, 3), (3, 12, 4)])
def test_double_broom_formulas_against_search(n1, k, n2):
    g = square(double_broom(n1, k, n2))
    f = double_broom_formulas(n1, k, n2)
    assert d_prime(g)[0] == f.projdim_SI
    if k >= 4:
        assert max_independent_set(g)[0] == f.dim
