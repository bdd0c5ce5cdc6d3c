"""Immutable simple graphs on vertices ``1..n`` and elementary operations.

Adjacency is stored as one integer bit-row per vertex; vertex ``v`` occupies
bit ``v - 1``.  Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import CapExceededError, SqtreeError

__all__ = [
    "Graph",
    "DistanceMatrix",
    "square",
    "distances",
    "diameter",
    "complement",
    "induced_subgraph",
    "relabel",
    "add_edge",
    "is_connected",
    "connected_components",
    "is_tree",
    "maximal_cliques",
    "free_vertices",
    "cut_points",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "empty_graph",
    "bits",
    "mask_of",
    "CLIQUE_CAP",
    "SQUARE_CAP",
]

CLIQUE_CAP = 64
SQUARE_CAP = 4096


def bits(mask: int) -> Iterator[int]:
    """Yield the 1-based vertices whose bits are set in ``mask``."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


class Graph:
    """A finite simple undirected graph on the vertex set ``{1, ..., n}``.

    Parameters
    ----------
    n : int
        Number of vertices.  ``n = 0`` is accepted only so that induced
        subgraphs on the empty set are representable.
    edges : iterable of pairs
        Each pair ``(u, v)`` with ``u != v`` and both endpoints in ``1..n``.
        Orientation and duplicates in the input are normalised away.

    Examples
    --------
    >>> g = Graph(3, [(1, 2), (3, 2)])
    >>> sorted(g.edges)
    [(1, 2), (2, 3)]
    >>> g.has_edge(3, 2)
    True
    """

    __slots__ = ("_n", "_edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise SqtreeError(f"vertex count must be a non-negative integer, got {n!r}")
        n = int(n)
        adj = [0] * n
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise SqtreeError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise SqtreeError(f"edge {{{u},{v}}} has an endpoint outside 1..{n}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self._n = n
        self._edges = frozenset(norm)
        self._adj = tuple(adj)
        self._hash = None

    @classmethod
    def _from_adjacency(cls, adj: list[int]) -> "Graph":
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(adj)
        g._edges = frozenset(
            (u, v) for u in range(1, g._n + 1) for v in bits(adj[u - 1]) if u < v
        )
        g._hash = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(1, self._n + 1)

    @property
    def adjacency(self) -> tuple:
        """Bit-row adjacency; entry ``v - 1`` is the neighbour mask of ``v``."""
        return self._adj

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v - 1]))

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v - 1]

    def degree(self, v: int) -> int:
        return self._adj[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self._n and 1 <= v <= self._n):
            return False
        return bool(self._adj[u - 1] >> (v - 1) & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop counts; unreachable pairs hold ``inf``.

    ``d[u - 1, v - 1]`` is the distance between vertices ``u`` and ``v``.
    """

    n: int
    d: np.ndarray

    def __call__(self, u: int, v: int) -> float:
        return self.d[u - 1, v - 1]

    @property
    def diameter(self) -> float:
        if self.n == 0:
            return 0
        return float(self.d.max())


def _check_square_cap(g: Graph) -> None:
    if g.n > SQUARE_CAP:
        raise CapExceededError("vertex count", g.n, SQUARE_CAP)


def square(g: Graph) -> Graph:
    """Graph on the same vertices joining every pair at distance 1 or 2.

    >>> square(path_graph(3)) == complete_graph(3)
    True
    """
    _check_square_cap(g)
    adj = g.adjacency
    out = []
    for v in range(g.n):
        row = adj[v]
        for u in bits(adj[v]):
            row |= adj[u - 1]
        out.append(row & ~(1 << v))
    return Graph._from_adjacency(out)


def distances(g: Graph) -> DistanceMatrix:
    """Breadth-first hop counts between all vertex pairs."""
    _check_square_cap(g)
    n = g.n
    d = np.full((n, n), np.inf)
    adj = g.adjacency
    for s in range(n):
        d[s, s] = 0
        seen = 1 << s
        frontier = 1 << s
        dist = 0
        while frontier:
            dist += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v - 1]
            nxt &= ~seen
            for v in bits(nxt):
                d[s, v - 1] = dist
            seen |= nxt
            frontier = nxt
    return DistanceMatrix(n, d)


def diameter(g: Graph) -> float:
    return distances(g).diameter


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._from_adjacency([full & ~row & ~(1 << v) for v, row in enumerate(g.adjacency)])


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``w``, relabelled to ``1..|w|`` in increasing order.

    Returns the subgraph and the tuple ``labels`` with ``labels[i - 1]`` the
    original name of new vertex ``i``.
    """
    labels = tuple(sorted(set(w)))
    for v in labels:
        if not 1 <= v <= g.n:
            raise SqtreeError(f"vertex {v} outside 1..{g.n}")
    pos = {v: i for i, v in enumerate(labels, start=1)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(labels), edges), labels


def relabel(g: Graph, perm) -> Graph:
    """Rename vertex ``v`` to ``perm[v - 1]``; ``perm`` is a permutation of ``1..n``."""
    perm = list(perm)
    if sorted(perm) != list(range(1, g.n + 1)):
        raise SqtreeError("relabelling is not a permutation of 1..n")
    return Graph(g.n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph(g.n, list(g.edges) + [(u, v)])


def _components_within(adj, allowed: int) -> list[int]:
    comps = []
    rest = allowed
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v - 1]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [list(bits(c)) for c in _components_within(g.adjacency, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return len(_components_within(g.adjacency, g.full_mask)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def maximal_cliques(g: Graph, cap: int = CLIQUE_CAP) -> list[list[int]]:
    """All inclusion-maximal cliques, each sorted, in lexicographic order.

    Bron--Kerbosch with Tomita pivoting over bit sets.
    """
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    adj = g.adjacency
    found = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(sorted(bits(r)))
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (adj[u - 1] & p).bit_count())
        for v in bits(p & ~adj[pivot - 1]):
            vb = 1 << (v - 1)
            expand(r | vb, p & adj[v - 1], x & adj[v - 1])
            p &= ~vb
            x |= vb

    if g.n:
        expand(0, g.full_mask, 0)
    found.sort()
    return found


def free_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if g.degree(v) == 1]


def cut_points(g: Graph) -> list[int]:
    """Vertices whose removal increases the number of connected components."""
    adj = g.adjacency
    full = g.full_mask
    base = len(_components_within(adj, full))
    return [
        v for v in g.vertices
        if len(_components_within(adj, full & ~(1 << (v - 1)))) > base
    ]


# Standard families.

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    """The path ``L_n``: ``1 - 2 - ... - n``."""
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise SqtreeError("cycles need at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def star_graph(leaves: int) -> Graph:
    """Star with centre 1 and leaves ``2..leaves + 1``."""
    return Graph(leaves + 1, [(1, v) for v in range(2, leaves + 2)])
