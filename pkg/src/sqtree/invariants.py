"""Exact combinatorial invariants of edge ideals.

Krull dimension (maximum independent set), induced matching number, big
height, and ``d'_G`` (maximum total flower count over semi-strongly disjoint
bouquet families).  For chordal graphs these determine ``reg`` and
``projdim`` of ``S/I(G)``; :func:`chordal_report` packages them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chordal import is_chordal
from .errors import CapExceededError, NotChordalError, SqtreeError, ZeroIdealError
from .graph import Graph, bits, complement, is_connected, maximal_cliques

__all__ = [
    "BouquetSet",
    "InvariantReport",
    "max_independent_set",
    "induced_matching_number",
    "d_prime",
    "bight",
    "chordal_report",
    "validate_bouquets",
    "MIS_CAP",
    "INDMAT_CAP",
    "DPRIME_CAP",
    "BIGHT_CAP",
]

MIS_CAP = 64
INDMAT_CAP = 40
DPRIME_CAP = 24
BIGHT_CAP = 24


def _mis_bitsets(adj: list[int], universe: int) -> int:
    """Maximum independent set of the graph given by bit rows, as a mask."""
    best = 0
    best_size = 0

    def popc(x):
        return x.bit_count()

    def rec(chosen: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        # vertices with no neighbours among the candidates are always taken
        while True:
            iso = 0
            for v in bits(cand):
                if not adj[v - 1] & cand:
                    iso |= 1 << (v - 1)
            if not iso:
                break
            chosen |= iso
            size += popc(iso)
            cand &= ~iso
        if not cand:
            if size > best_size:
                best, best_size = chosen, size
            return
        if size + popc(cand) <= best_size:
            return
        v = max(bits(cand), key=lambda u: (popc(adj[u - 1] & cand), -u))
        vb = 1 << (v - 1)
        rec(chosen | vb, size + 1, cand & ~vb & ~adj[v - 1])
        rec(chosen, size, cand & ~vb)

    rec(0, 0, universe)
    return best


def max_independent_set(g: Graph, cap: int = MIS_CAP) -> tuple[int, list[int]]:
    """Size and a witness of a maximum independent set (branch and bound).

    >>> from sqtree.graph import path_graph, square
    >>> max_independent_set(square(path_graph(9)))[0]
    3
    """
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    best = _mis_bitsets(list(g.adjacency), g.full_mask)
    w = list(bits(best))
    return len(w), w


def _edge_conflict_rows(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    edges = g.sorted_edges()
    adj = g.adjacency
    closed = [adj[u - 1] | adj[v - 1] | (1 << (u - 1)) | (1 << (v - 1)) for u, v in edges]
    rows = []
    for i, (u, v) in enumerate(edges):
        row = 0
        for j, (c, d) in enumerate(edges):
            if i != j and (closed[i] >> (c - 1) & 1 or closed[i] >> (d - 1) & 1):
                row |= 1 << j
        rows.append(row)
    return edges, rows


def induced_matching_number(g: Graph, cap: int = INDMAT_CAP) -> tuple[int, list[tuple[int, int]]]:
    """Largest induced matching: a maximum independent set of edges where two
    edges conflict when they share a vertex or are joined by an edge."""
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    if g.m == 0:
        return 0, []
    edges, rows = _edge_conflict_rows(g)
    best = _mis_bitsets(rows, (1 << len(edges)) - 1)
    w = [edges[j - 1] for j in bits(best)]
    return len(w), w


@dataclass(frozen=True)
class BouquetSet:
    """Semi-strongly disjoint bouquets: ``flowers[root]`` are the flowers of
    the bouquet rooted at ``root``."""

    roots: tuple
    flowers: dict = field(hash=False)

    @property
    def flower_count(self) -> int:
        return sum(len(f) for f in self.flowers.values())


def validate_bouquets(g: Graph, b: BouquetSet) -> list[str]:
    """Return the list of violated bouquet invariants (empty when valid)."""
    problems = []
    if set(b.roots) != set(b.flowers):
        problems.append("roots and flower map keys differ")
    used = set()
    for r in b.roots:
        fl = set(b.flowers.get(r, ()))
        if not fl:
            problems.append(f"root {r} has no flowers")
        for z in fl:
            if not g.has_edge(r, z):
                problems.append(f"no stem between root {r} and flower {z}")
        part = fl | {r}
        if part & used:
            problems.append(f"bouquet at {r} overlaps another bouquet")
        used |= part
    for i, r in enumerate(b.roots):
        for s in b.roots[i + 1:]:
            if g.has_edge(r, s):
                problems.append(f"roots {r} and {s} are adjacent")
    return problems


def _augment(root: int, adj, match_flower: dict, match_root: dict, pool: int) -> bool:
    # Kuhn augmenting path from ``root`` into the flower pool.
    seen = 0
    stack = [(root, iter(bits(adj[root - 1] & pool)))]
    parent = {}
    while stack:
        r, it = stack[-1]
        for z in it:
            zb = 1 << (z - 1)
            if seen & zb:
                continue
            seen |= zb
            parent[z] = r
            if z not in match_flower:
                # flip the path back to ``root``
                while True:
                    rr = parent[z]
                    prev = match_root.get(rr)
                    match_flower[z] = rr
                    match_root[rr] = z
                    if rr == root:
                        return True
                    z = prev
            stack.append((match_flower[z], iter(bits(adj[match_flower[z] - 1] & pool))))
            break
        else:
            stack.pop()
    return False


def d_prime(g: Graph, cap: int = DPRIME_CAP) -> tuple[int, BouquetSet]:
    """Maximum number of flowers in a semi-strongly disjoint set of bouquets.

    The search enumerates independent root sets ``R``.  For fixed ``R`` the
    best family uses every vertex of ``N(R)`` as a flower, which is possible
    exactly when a matching saturates ``R`` into ``N(R)`` (each root needs
    its own flower; the remaining neighbours join any adjacent root).  Hall
    violations persist under adding roots, so they prune the search, as does
    the bound ``|N(R) | N(candidates)|``.

    Ties are broken towards the lexicographically smallest root tuple.
    """
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    adj = g.adjacency
    n = g.n
    best = {"score": 0, "roots": ()}

    def consider(roots: tuple, nbr: int) -> None:
        s = nbr.bit_count()
        if s > best["score"] or (s == best["score"] and s > 0 and roots < best["roots"]):
            best["score"], best["roots"] = s, roots

    def rec(roots: tuple, nbr: int, cand: int, mf: dict, mr: dict) -> None:
        if roots:
            consider(roots, nbr)
        reach = nbr
        for v in bits(cand):
            reach |= adj[v - 1]
        if reach.bit_count() <= best["score"]:
            return
        for v in bits(cand):
            vb = 1 << (v - 1)
            new_nbr = nbr | adj[v - 1]
            mf2, mr2 = dict(mf), dict(mr)
            if not _augment(v, adj, mf2, mr2, new_nbr):
                continue
            # later candidates only, non-adjacent to v
            later = cand & ~((vb << 1) - 1) & ~adj[v - 1]
            rec(roots + (v,), new_nbr, later, mf2, mr2)

    rec((), 0, (1 << n) - 1, {}, {})
    roots = best["roots"]
    if not roots:
        return 0, BouquetSet((), {})
    # rebuild a witness: matched flower per root, extra neighbours to the
    # smallest adjacent root
    mf, mr = {}, {}
    pool = 0
    for r in roots:
        pool |= adj[r - 1]
    for r in roots:
        ok = _augment(r, adj, mf, mr, pool)
        assert ok
    flowers = {r: {mr[r]} for r in roots}
    for z in bits(pool):
        if z not in mf:
            owner = min(r for r in roots if adj[r - 1] >> (z - 1) & 1)
            flowers[owner].add(z)
    witness = BouquetSet(roots, {r: tuple(sorted(f)) for r, f in flowers.items()})
    return best["score"], witness


def bight(g: Graph, cap: int = BIGHT_CAP) -> int:
    """Big height of ``I(g)``: the largest minimal vertex cover, i.e.
    ``n`` minus the smallest inclusion-maximal independent set."""
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    if g.m == 0:
        return 0
    smallest = min(len(c) for c in maximal_cliques(complement(g), cap=max(cap, g.n)))
    return g.n - smallest


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of ``S/I(G)`` with the origin of each value.

    ``projdim_SI`` and ``depth`` refer to ``S/I``; ``depth = n - projdim_SI``.
    Provenance tags are ``search``, ``theorem``, ``formula`` or ``oracle``.
    """

    n: int
    m: int
    dim: int
    depth: int
    projdim_SI: int
    reg: int
    bight: int
    indmat: int
    d_prime: int
    linear_resolution: bool
    provenance: dict = field(default_factory=dict, hash=False, compare=False)

    CSV_HEADER = "n,m,dim,depth,pd,reg,bight,indmat,dprime,linres,provenance"

    def __post_init__(self):
        for name in ("dim", "depth", "projdim_SI", "reg", "bight", "indmat", "d_prime"):
            if getattr(self, name) < 0:
                raise SqtreeError(f"{name} must be non-negative")
        if self.depth + self.projdim_SI != self.n:
            raise SqtreeError("depth + projdim(S/I) must equal n")
        if self.reg < self.indmat:
            raise SqtreeError("reg below indmat contradicts the induced matching bound")

    def csv_row(self) -> str:
        prov = "|".join(f"{k}:{v}" for k, v in sorted(self.provenance.items()))
        vals = [self.n, self.m, self.dim, self.depth, self.projdim_SI, self.reg,
                self.bight, self.indmat, self.d_prime, int(self.linear_resolution), prov]
        return ",".join(str(v) for v in vals)


def chordal_report(g: Graph) -> InvariantReport:
    """Invariants of a connected chordal graph from exact combinatorial search.

    ``projdim(S/I) = d'_G`` (Kimura) and ``reg(S/I) = indmat(G)``
    (Hà--Van Tuyl) are used as theorems; ``dim``, ``bight``, ``indmat`` and
    ``d'`` come from search.
    """
    if g.m == 0:
        raise ZeroIdealError("edgeless graph: I(G) is the zero ideal")
    if not is_connected(g):
        raise SqtreeError("chordal_report expects a connected graph; split into components")
    if not is_chordal(g):
        raise NotChordalError("graph is not chordal; use betti.hochster_report instead")
    dim, _ = max_independent_set(g)
    im, _ = induced_matching_number(g)
    dp, _ = d_prime(g)
    return InvariantReport(
        n=g.n, m=g.m, dim=dim, depth=g.n - dp, projdim_SI=dp, reg=im,
        bight=bight(g), indmat=im, d_prime=dp, linear_resolution=(im == 1),
        provenance={
            "dim": "search", "indmat": "search", "dprime": "search", "bight": "search",
            "pd": "theorem", "reg": "theorem", "depth": "theorem", "linres": "theorem",
        },
    )
