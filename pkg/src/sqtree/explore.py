"""Unlabeled tree enumeration and the regularity / projective-dimension scan
comparing ``S/I(T)`` with ``S/I(T^2)``.

Trees are canonicalised by AHU encoding rooted at the centre (or at each of
the two centres, keeping the smaller code).  The representative graph of a
canonical tree is labelled in breadth-first order from that root with
children sorted by code, so it depends only on the isomorphism class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .chordal import find_gap
from .errors import CapExceededError, NotATreeError, SqtreeError
from .graph import Graph, is_tree, square
from .invariants import d_prime, induced_matching_number

__all__ = [
    "CanonicalTree",
    "ScanRow",
    "ScanSummary",
    "tree_centers",
    "canonical_code",
    "canonical_tree",
    "enumerate_trees",
    "scan_conjectures",
    "scan_csv",
    "is_tree_square",
    "UNLABELED_TREE_COUNTS",
    "ENUMERATE_CAP",
    "SCAN_CAP",
]

# OEIS A000055, n = 1..12
UNLABELED_TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47,
                         10: 106, 11: 235, 12: 551}
ENUMERATE_CAP = 12
SCAN_CAP = 11


def tree_centers(t: Graph) -> list[int]:
    """The one or two centres, found by repeatedly stripping leaves."""
    if not is_tree(t):
        raise NotATreeError("input graph is not a tree")
    remaining = set(t.vertices)
    deg = {v: t.degree(v) for v in remaining}
    layer = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for u in t.neighbors(v):
                if u in remaining:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(remaining)


def _rooted_codes(t: Graph, root: int) -> tuple[str, dict, dict]:
    parent = {root: 0}
    order = [root]
    for v in order:
        for u in t.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                order.append(u)
    code = {}
    children = {v: [] for v in order}
    for v in reversed(order):
        kids = sorted((u for u in t.neighbors(v) if u != parent[v]), key=lambda u: code[u])
        children[v] = kids
        code[v] = "(" + "".join(code[u] for u in kids) + ")"
    return code[root], code, children


def canonical_code(t: Graph) -> str:
    """AHU string identifying ``t`` up to isomorphism.

    >>> from sqtree.graph import path_graph, star_graph
    >>> canonical_code(path_graph(4)) == canonical_code(star_graph(3))
    False
    """
    return min(_rooted_codes(t, c)[0] for c in tree_centers(t))


@dataclass(frozen=True)
class CanonicalTree:
    n: int
    code: str
    graph: Graph


def canonical_tree(t: Graph) -> CanonicalTree:
    best = None
    for c in tree_centers(t):
        code, _, children = _rooted_codes(t, c)
        if best is None or code < best[0]:
            best = (code, c, children)
    code, root, children = best
    label = {root: 1}
    queue = [root]
    for v in queue:
        for u in children[v]:
            label[u] = len(label) + 1
            queue.append(u)
    rep = Graph(t.n, [(label[u], label[v]) for u, v in t.edges])
    return CanonicalTree(t.n, code, rep)


def enumerate_trees(n: int) -> list[CanonicalTree]:
    """One representative per isomorphism class of trees on ``n`` vertices,
    sorted by canonical code.

    Built by attaching a leaf at every vertex of every tree on ``n - 1``
    vertices and deduplicating by canonical code.
    """
    if n < 2:
        raise SqtreeError(f"tree order must be at least 2, got {n}")
    if n > ENUMERATE_CAP:
        raise CapExceededError("tree order", n, ENUMERATE_CAP)
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple:
    level = {canonical_code(Graph(1)): Graph(1)}
    for size in range(2, n + 1):
        nxt = {}
        for t in level.values():
            for v in t.vertices:
                grown = Graph(size, list(t.edges) + [(v, size)])
                ct = canonical_tree(grown)
                nxt.setdefault(ct.code, ct.graph)
        level = nxt
    return tuple(CanonicalTree(n, code, level[code]) for code in sorted(level))


@dataclass(frozen=True)
class ScanRow:
    """Invariants of ``S/I(T)`` and ``S/I(T^2)`` for one tree.

    Both graphs are chordal, so ``reg = indmat`` and ``pd = d'``; every
    ``pd``/``depth`` value refers to the quotient ring ``S/I``.
    """

    code: str
    n: int
    reg_T: int
    reg_T2: int
    pd_T: int
    pd_T2: int
    depth_T: int
    depth_T2: int
    gap: Optional[tuple] = None

    @property
    def reg_increases(self) -> bool:
        return self.reg_T2 > self.reg_T

    @property
    def pd_nondecreasing(self) -> bool:
        return self.pd_T <= self.pd_T2


@dataclass(frozen=True)
class ScanSummary:
    n_max: int
    trees_scanned: int
    reg_increase_codes: tuple
    pd_violation_codes: tuple

    def lines(self) -> list[str]:
        return [
            f"trees scanned (2 <= n <= {self.n_max}): {self.trees_scanned}",
            f"reg(S/I(T^2)) > reg(S/I(T)) within scanned range: {len(self.reg_increase_codes)}",
            f"pd(I(T)) > pd(I(T^2)) within scanned range: {len(self.pd_violation_codes)}",
        ]


def scan_conjectures(n_max: int) -> tuple[list[ScanRow], ScanSummary]:
    """Scan all trees with ``2 <= n <= n_max``; report, never conclude."""
    if n_max > SCAN_CAP:
        raise CapExceededError("scan order", n_max, SCAN_CAP)
    rows = []
    for n in range(2, n_max + 1):
        for ct in enumerate_trees(n):
            t = ct.graph
            t2 = square(t)
            pd_t, _ = d_prime(t)
            pd_t2, _ = d_prime(t2)
            rows.append(ScanRow(
                code=ct.code, n=n,
                reg_T=induced_matching_number(t)[0],
                reg_T2=induced_matching_number(t2)[0],
                pd_T=pd_t, pd_T2=pd_t2,
                depth_T=n - pd_t, depth_T2=n - pd_t2,
                gap=find_gap(t2),
            ))
    rows.sort(key=lambda r: (r.n, r.code))
    summary = ScanSummary(
        n_max=n_max,
        trees_scanned=len(rows),
        reg_increase_codes=tuple(r.code for r in rows if r.reg_increases),
        pd_violation_codes=tuple(r.code for r in rows if not r.pd_nondecreasing),
    )
    return rows, summary


SCAN_CSV_HEADER = ("code,n,reg_SI_T,reg_SI_T2,pd_SI_T,pd_SI_T2,depth_SI_T,depth_SI_T2,"
                   "reg_increases,pd_nondecreasing,gap_u1,gap_v1,gap_u2,gap_v2")


def scan_csv(rows: list[ScanRow]) -> str:
    out = [SCAN_CSV_HEADER]
    for r in rows:
        gap = [*r.gap[0], *r.gap[1]] if r.gap else ["", "", "", ""]
        vals = [r.code, r.n, r.reg_T, r.reg_T2, r.pd_T, r.pd_T2, r.depth_T, r.depth_T2,
                int(r.reg_increases), int(r.pd_nondecreasing), *gap]
        out.append(",".join(str(v) for v in vals))
    return "\n".join(out) + "\n"


def _to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def is_tree_square(g: Graph) -> bool:
    """Whether ``g`` is isomorphic to the square of some tree (exhaustive)."""
    import networkx as nx

    if g.n <= 1:
        return True
    target = _to_nx(g)
    for ct in enumerate_trees(g.n):
        sq = square(ct.graph)
        if sq.m == g.m and nx.is_isomorphic(target, _to_nx(sq)):
            return True
    return False
