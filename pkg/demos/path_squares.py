"""Invariants of S/I(L_n^2) from search, next to the closed forms.

Run: python3 demos/path_squares.py [n_max]
"""

import sys

import numpy as np

from sqtree.betti import hochster_betti
from sqtree.chordal import is_cochordal
from sqtree.graph import path_graph, square
from sqtree.invariants import chordal_report
from sqtree.trees import path_formulas

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 15

rows = []
for n in range(3, n_max + 1):
    r = chordal_report(square(path_graph(n)))
    f = path_formulas(n)
    rows.append((n, r.dim, f.dim, r.projdim_SI, f.projdim_SI, r.reg, f.reg, r.depth))
table = np.array(rows)

print("  n  dim (formula)   pd (formula)  reg (formula)  depth")
for n, dim, fdim, pd, fpd, reg, freg, depth in table:
    print(f"{n:3d}  {dim:3d} ({fdim:3d})     {pd:3d} ({fpd:3d})     {reg:3d} ({freg:3d})    {depth:3d}")

# every column pair agrees
assert (table[:, 1] == table[:, 2]).all()
assert (table[:, 3] == table[:, 4]).all()
assert (table[:, 5] == table[:, 6]).all()

# the Betti oracle agrees where it is cheap enough
for n in range(3, 10):
    t = hochster_betti(square(path_graph(n)))
    assert (t.projdim, t.reg) == (table[n - 3, 3], table[n - 3, 5])
print("Hochster oracle agrees for n = 3..9")

linear = [n for n in range(2, n_max + 1) if is_cochordal(square(path_graph(n)))]
print("I(L_n^2) has a linear resolution for n in", linear)
