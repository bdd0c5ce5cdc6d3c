"""Graded Betti numbers of ``S/I(G)`` over the rationals via Hochster's formula.

    beta_{i,j}(S/I(G)) = sum over j-subsets W of dim H~_{j-i-1}(Ind(G_W); Q)

where ``Ind(G_W)`` is the independence complex of the induced subgraph.
Homology ranks come from exact integer elimination of boundary matrices;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import CapExceededError, SqtreeError
from .graph import Graph, bits
from .invariants import (
    InvariantReport,
    bight,
    d_prime,
    induced_matching_number,
    max_independent_set,
)

__all__ = [
    "SimplicialComplex",
    "BettiTable",
    "independence_complex",
    "reduced_homology_ranks",
    "exact_rank",
    "euler_characteristic",
    "hochster_betti",
    "reg_pd_depth",
    "hochster_report",
    "format_betti_table",
    "COMPLEX_CAP",
    "FACE_CAP",
    "HOCHSTER_CAP",
]

COMPLEX_CAP = 16
FACE_CAP = 50_000
HOCHSTER_CAP = 12


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces as vertex bitmasks; ``faces[d + 1]`` lists the ``d``-faces,
    so ``faces[0] == [0]`` is the empty face."""

    nvertices: int
    faces: tuple

    def face_sets(self, dim: int) -> list[tuple[int, ...]]:
        return [tuple(bits(f)) for f in self.faces[dim + 1]]

    @property
    def dimension(self) -> int:
        return len(self.faces) - 2

    def restrict(self, w: int) -> "SimplicialComplex":
        """Subcomplex of faces contained in the vertex mask ``w``."""
        faces = [[f for f in level if not f & ~w] for level in self.faces]
        while len(faces) > 1 and not faces[-1]:
            faces.pop()
        return SimplicialComplex(self.nvertices, tuple(tuple(level) for level in faces))


def independence_complex(g: Graph, cap: int = COMPLEX_CAP) -> SimplicialComplex:
    """All independent sets of ``g`` (including the empty set), by dimension."""
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    adj = g.adjacency
    levels = [[0]]
    frontier = [(0, g.full_mask)]  # (face, vertices still addable above its max)
    while True:
        nxt = []
        for face, allowed in frontier:
            for v in bits(allowed):
                vb = 1 << (v - 1)
                higher = allowed & ~((vb << 1) - 1) & ~adj[v - 1]
                nxt.append((face | vb, higher))
        if not nxt:
            break
        levels.append(sorted(f for f, _ in nxt))
        frontier = nxt
    return SimplicialComplex(g.n, tuple(tuple(level) for level in levels))


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free Gaussian elimination.

    Rows are reduced by integer combinations and divided by their content,
    which keeps entries small for the +-1 boundary matrices used here.
    """
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        best = None
        for idx in range(rank, len(rows)):
            a = rows[idx][col]
            if a and (best is None or abs(a) < best):
                piv, best = idx, abs(a)
                if best == 1:
                    break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pc = p[col]
        for idx in range(rank + 1, len(rows)):
            r = rows[idx]
            a = r[col]
            if not a:
                continue
            g = gcd(pc, a)
            mp, ma = pc // g, a // g
            new = [mp * x - ma * y for x, y in zip(r, p)]
            c = 0
            for x in new:
                if x:
                    c = gcd(c, x)
                    if c == 1:
                        break
            if c > 1:
                new = [x // c for x in new]
            rows[idx] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


def _boundary_rank(lower: tuple, upper: tuple) -> int:
    """Rank of the boundary map from ``upper`` faces onto ``lower`` faces."""
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    ncols = len(lower)
    rows = []
    for face in upper:
        row = [0] * ncols
        sign = 1
        for v in bits(face):
            row[index[face & ~(1 << (v - 1))]] = sign
            sign = -sign
        rows.append(row)
    # rank is transpose-invariant; eliminate along the shorter side
    if len(rows) > ncols:
        rows = [list(col) for col in zip(*rows)]
    return exact_rank(rows)


def reduced_homology_ranks(c: SimplicialComplex, cap: int = FACE_CAP) -> list[int]:
    """Ranks of ``H~_d(c; Q)`` for ``d = -1, 0, ..., dim c``.

    The empty face spans chain degree -1, so the complex ``{}`` (only the
    empty face) has ``H~_{-1} = Q``.
    """
    total = sum(len(level) for level in c.faces)
    if total > cap:
        raise CapExceededError("face count", total, cap)
    if not c.faces or c.faces[0] != (0,):
        raise SqtreeError("void complex: the empty face is missing")
    levels = c.faces
    ranks_d = [_boundary_rank(levels[k - 1], levels[k]) for k in range(1, len(levels))]
    # ranks_d[k - 1] is rank of the boundary from level k to level k - 1
    out = []
    for k in range(len(levels)):
        into = ranks_d[k - 1] if k >= 1 else 0
        outof = ranks_d[k] if k < len(ranks_d) else 0
        out.append(len(levels[k]) - into - outof)
    return out


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``sum_{d >= -1} (-1)^d f_d``."""
    return sum((-1) ** (k - 1) * len(level) for k, level in enumerate(c.faces))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta_{i,j}`` of ``S/I``; zero entries omitted."""

    nvars: int
    entries: dict = field(hash=False)

    def __getitem__(self, ij) -> int:
        return self.entries.get(ij, 0)

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def depth(self) -> int:
        return self.nvars - self.projdim

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.projdim + 1)]


def _subsets_by_weight(n: int):
    # population count, then numeric value
    return sorted(range(1 << n), key=lambda w: (w.bit_count(), w))


def hochster_betti(g: Graph, cap: int = HOCHSTER_CAP) -> BettiTable:
    """Full graded Betti table of ``S/I(g)`` by Hochster's formula.

    >>> from sqtree.graph import cycle_graph
    >>> hochster_betti(cycle_graph(4)).entries
    {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    """
    if g.n > cap:
        raise CapExceededError("vertex count", g.n, cap)
    ind = independence_complex(g, cap=max(cap, COMPLEX_CAP))
    adj = g.adjacency
    entries: dict[tuple[int, int], int] = {}
    for w in _subsets_by_weight(g.n):
        # an isolated vertex of G_W is a cone point of Ind(G_W): acyclic
        if any(not adj[v - 1] & w for v in bits(w)):
            continue
        j = w.bit_count()
        ranks = reduced_homology_ranks(ind.restrict(w))
        for k, rank in enumerate(ranks):
            if rank:
                d = k - 1
                i = j - d - 1
                entries[(i, j)] = entries.get((i, j), 0) + rank
    if entries.get((0, 0)) != 1:
        raise SqtreeError("Hochster sum produced beta_00 != 1")
    return BettiTable(g.n, dict(sorted(entries.items())))


def reg_pd_depth(table: BettiTable, nvars: int | None = None) -> tuple[int, int, int]:
    nvars = table.nvars if nvars is None else nvars
    return table.reg, table.projdim, nvars - table.projdim


def hochster_report(g: Graph) -> InvariantReport:
    """Invariant report for an arbitrary graph; pd/reg/depth from the oracle."""
    table = hochster_betti(g)
    reg, pd, depth = reg_pd_depth(table)
    dim, _ = max_independent_set(g)
    im, _ = induced_matching_number(g)
    dp, _ = d_prime(g)
    return InvariantReport(
        n=g.n, m=g.m, dim=dim, depth=depth, projdim_SI=pd, reg=reg,
        bight=bight(g), indmat=im, d_prime=dp, linear_resolution=(g.m > 0 and reg == 1),
        provenance={
            "dim": "search", "indmat": "search", "dprime": "search", "bight": "search",
            "pd": "oracle", "reg": "oracle", "depth": "oracle", "linres": "oracle",
        },
    )


def format_betti_table(table: BettiTable) -> str:
    """Plain-text table of ``S/I``: one row per homological index ``i``,
    one column per internal shift ``j - i``."""
    pd, reg = table.projdim, table.reg
    width = max(3, max(len(str(v)) for v in table.entries.values()) + 1)
    head = "i\\j-i".ljust(6) + "".join(str(c).rjust(width) for c in range(reg + 1))
    lines = [f"Betti table of S/I(G), n={table.nvars}, over QQ", head]
    for i in range(pd + 1):
        cells = []
        for s in range(reg + 1):
            v = table[(i, i + s)]
            cells.append((str(v) if v else ".").rjust(width))
        lines.append(str(i).ljust(6) + "".join(cells))
    lines.append("total ".ljust(6) + " ".join(str(t) for t in table.totals()))
    return "\n".join(lines) + "\n"
