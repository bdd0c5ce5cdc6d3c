"""The six-vertex double star: I(T) is linear but I(T^2) is not.

T has edges 13, 23, 34, 45, 46.  In T^2 the edges 12 and 56 form a gap,
so the complement of T^2 has an induced 4-cycle and regularity jumps.

Run: python3 demos/double_star_gap.py
"""

from sqtree.betti import format_betti_table, hochster_betti
from sqtree.chordal import find_gap, is_cochordal
from sqtree.graph import Graph, square
from sqtree.invariants import chordal_report
from sqtree.monomial import edge_ideal, search_linear_quotients
from sqtree.trees import classification_verdict

t = Graph(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)])
t2 = square(t)
print("T^2 edges:", t2.sorted_edges())
print("gap in T^2:", find_gap(t2))
print("co-chordal: T", is_cochordal(t), " T^2", is_cochordal(t2))
print("linear quotients: T", search_linear_quotients(edge_ideal(t)) is not None,
      " T^2", search_linear_quotients(edge_ideal(t2)) is not None)

cls, linear, why = classification_verdict(t)
print(f"{cls}: linear={linear} ({why})")

print()
print(format_betti_table(hochster_betti(t2)), end="")
print()
print("reg S/I(T) =", chordal_report(t).reg, " reg S/I(T^2) =", chordal_report(t2).reg)
