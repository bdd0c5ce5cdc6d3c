"""Recognising squares of trees from maximal cliques.

Run: python3 demos/recognize_squares.py
"""

from sqtree.explore import is_tree_square
from sqtree.graph import Graph, cycle_graph, path_graph, square
from sqtree.trees import double_broom, harary_ross_check

candidates = {
    "L_7^2": square(path_graph(7)),
    "double broom P(2,5,3)^2": square(double_broom(3, 5, 4)),
    "C_5": cycle_graph(5),
    "L_5": path_graph(5),
    "two triangles sharing an edge, plus a tail": Graph(5, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]),
}

for name, g in candidates.items():
    ok, verdicts = harary_ross_check(g)
    flags = " ".join(f"{c}{'+' if h else '-'}" for c, h, _ in verdicts)
    print(f"{name:45s} {flags}  verdict={ok}  exhaustive={is_tree_square(g)}")
