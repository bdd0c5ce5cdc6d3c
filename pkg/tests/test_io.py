import pytest

from sqtree.errors import GraphFormatError
from sqtree.graph import Graph, cycle_graph
from sqtree.io import format_edge_list, parse_edge_list, read_edge_list, to_dot, write_edge_list


def test_parse_with_comments_and_blanks():
    text = "# a comment\n\n4 3\n1 2   # edge\n2 3\n\n3 4\n"
    assert parse_edge_list(text) == Graph(4, [(1, 2), (2, 3), (3, 4)])


def test_round_trip(tmp_path):
    g = cycle_graph(5)
    path = tmp_path / "c5.edges"
    write_edge_list(g, path)
    assert read_edge_list(path) == g
    assert format_edge_list(g).splitlines()[0] == "5 5"


def test_isolated_vertices_survive():
    g = parse_edge_list("5 1\n2 4\n")
    assert g.n == 5 and g.m == 1


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("3 2\n1 2\n", 2, "header declares 2 edges"),
        ("3 1\n1 x\n", 2, "non-integer"),
        ("3 1\n1 4\n", 2, "out of range"),
        ("3 1\n2 2\n", 2, "self-loop"),
        ("3 1\n2 1\n", 2, "ascending"),
        ("3 2\n1 2\n1 2\n", 3, "duplicate"),
        ("3 1 7\n1 2\n", 1, "expected 2 integers"),
        ("# only\n3 1\n\n1 2 3\n", 4, "expected 2 integers"),
    ],
)
def test_parse_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(text)
    assert info.value.lineno == lineno
    assert str(info.value).startswith(f"line {lineno}: ")
    assert fragment in str(info.value)


def test_empty_input():
    with pytest.raises(GraphFormatError):
        parse_edge_list("# nothing\n")


def test_dot_export_is_sorted():
    dot = to_dot(Graph(3, [(2, 3), (1, 2)]))
    assert dot == "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  2 -- 3;\n}\n"
