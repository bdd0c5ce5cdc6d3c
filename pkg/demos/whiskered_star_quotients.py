"""Linear quotients for the square of a partially whiskered star.

The revlex order with x_0 > x_1 > ... > x_n > y_1 > ... > y_m gives linear
quotients; the colon variable sets give every Betti number of I(T^2).

Run: python3 demos/whiskered_star_quotients.py [n m]
"""

import sys

from sqtree.betti import format_betti_table, hochster_betti
from sqtree.graph import square
from sqtree.monomial import betti_from_lq, edge_ideal, format_certificate, revlex_order, verify_linear_quotients
from sqtree.trees import classify_tree, whiskered_star

n, m = (int(a) for a in sys.argv[1:3]) if len(sys.argv) > 2 else (4, 2)
t = whiskered_star(n, m)
print("tree:", classify_tree(t), t.sorted_edges())

ideal = edge_ideal(square(t))
cert = verify_linear_quotients(ideal, revlex_order(ideal))
print(format_certificate(cert), end="")

totals, pd = betti_from_lq(cert)
print("beta_i(I(T^2)) from the certificate:", totals, " projdim(I) =", pd)

table = hochster_betti(square(t))
print()
print(format_betti_table(table), end="")
# beta_i(I) = beta_{i+1}(S/I)
assert table.totals()[1:] == totals
