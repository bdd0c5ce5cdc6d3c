"""Compare reg and pd of S/I(T) and S/I(T^2) over all small trees.

This is an observation over a finite range, nothing more.

Run: python3 demos/conjecture_scan.py [n_max]
"""

import sys
from collections import Counter

from sqtree.explore import enumerate_trees, scan_conjectures
from sqtree.trees import classify_tree

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 9
rows, summary = scan_conjectures(n_max)
for line in summary.lines():
    print(line)

by_n = Counter(r.n for r in rows if r.reg_increases)
print("reg increases by tree order:", dict(sorted(by_n.items())))

print()
print("first few trees where reg goes up:")
reps = {ct.code: ct.graph for n in range(2, n_max + 1) for ct in enumerate_trees(n)}
for r in [r for r in rows if r.reg_increases][:5]:
    print(f"  n={r.n} {classify_tree(reps[r.code])}: reg {r.reg_T} -> {r.reg_T2}, "
          f"pd {r.pd_T} -> {r.pd_T2}, gap {r.gap}")
