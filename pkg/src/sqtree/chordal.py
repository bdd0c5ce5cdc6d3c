"""Chordal and co-chordal recognition, gaps, and Fröberg's criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ZeroIdealError
from .graph import Graph, bits, complement

__all__ = [
    "EliminationOrder",
    "perfect_elimination_order",
    "is_perfect_elimination_order",
    "is_chordal",
    "is_cochordal",
    "find_gap",
    "is_gap_free",
    "has_linear_resolution",
]


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex permutation; ``perfect`` is set only after verification."""

    order: tuple
    perfect: bool = False


def _mcs_order(g: Graph) -> list[int]:
    # Maximum cardinality search numbers vertices n..1; its reverse visiting
    # order is a perfect elimination order whenever g is chordal.
    weight = [0] * (g.n + 1)
    unnumbered = set(g.vertices)
    visit = []
    while unnumbered:
        v = max(unnumbered, key=lambda u: (weight[u], -u))
        unnumbered.remove(v)
        visit.append(v)
        for u in bits(g.neighbor_mask(v)):
            if u in unnumbered:
                weight[u] += 1
    visit.reverse()
    return visit


def is_perfect_elimination_order(g: Graph, order) -> bool:
    """Check that every vertex's later neighbours in ``order`` form a clique."""
    order = list(order)
    if sorted(order) != list(g.vertices):
        return False
    later = g.full_mask
    adj = g.adjacency
    for v in order:
        later &= ~(1 << (v - 1))
        nbrs = adj[v - 1] & later
        for u in bits(nbrs):
            if nbrs & ~(1 << (u - 1)) & ~adj[u - 1]:
                return False
    return True


def perfect_elimination_order(g: Graph) -> Optional[EliminationOrder]:
    """A verified perfect elimination order of ``g``, or ``None`` if not chordal."""
    order = _mcs_order(g)
    if is_perfect_elimination_order(g, order):
        return EliminationOrder(tuple(order), perfect=True)
    return None


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def find_gap(g: Graph) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """Lexicographically smallest induced ``2K_2`` in ``g``, or ``None``.

    >>> from sqtree.graph import Graph
    >>> find_gap(Graph(4, [(1, 2), (3, 4)]))
    ((1, 2), (3, 4))
    """
    edges = g.sorted_edges()
    adj = g.adjacency
    for i, (a, b) in enumerate(edges):
        # vertices adjacent to or equal to a or b
        blocked = adj[a - 1] | adj[b - 1] | (1 << (a - 1)) | (1 << (b - 1))
        for c, d in edges[i + 1:]:
            if not (blocked >> (c - 1) & 1) and not (blocked >> (d - 1) & 1):
                return (a, b), (c, d)
    return None


def is_gap_free(g: Graph) -> bool:
    return find_gap(g) is None


def has_linear_resolution(g: Graph) -> bool:
    """Whether the edge ideal ``I(g)`` has a linear resolution.

    Decided combinatorially: ``I(g)`` is linear exactly when ``g`` is
    co-chordal (Fröberg).

    Raises
    ------
    ZeroIdealError
        If ``g`` has no edges.
    """
    if g.m == 0:
        raise ZeroIdealError("edgeless graph: I(G) is the zero ideal")
    return is_cochordal(g)
