"""Squarefree quadratic monomial ideals: colon ideals and linear quotients.

A generator ``x_a x_b`` is stored as the pair ``(a, b)`` with ``a < b``.
Colon ideals of monomial ideals are computed from the monomial quotients
``u_k / gcd(u_k, u_i)`` followed by minimalisation; no polynomial arithmetic
is involved.

Index conventions: ``betti_from_lq`` reports ``beta_i(I)`` and
``projdim(I)``.  For the quotient ring, ``beta_{i+1}(S/I) = beta_i(I)`` and
``projdim(S/I) = projdim(I) + 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .errors import CapExceededError, SqtreeError, ZeroIdealError
from .graph import Graph

__all__ = [
    "MonomialIdeal2",
    "LinearQuotientCertificate",
    "edge_ideal",
    "colon_prefix",
    "revlex_order",
    "revlex_greater",
    "verify_linear_quotients",
    "search_linear_quotients",
    "betti_from_lq",
    "format_certificate",
    "LQ_SEARCH_CAP",
]

log = logging.getLogger(__name__)

LQ_SEARCH_CAP = 24


@dataclass(frozen=True)
class MonomialIdeal2:
    """Ideal generated by squarefree degree-2 monomials ``x_a x_b``."""

    nvars: int
    gens: frozenset

    def __post_init__(self):
        norm = set()
        for a, b in self.gens:
            if a == b:
                raise SqtreeError(f"x_{a}^2 is not squarefree")
            if a > b:
                a, b = b, a
            if not (1 <= a and b <= self.nvars):
                raise SqtreeError(f"variable index out of range 1..{self.nvars}: ({a},{b})")
            norm.add((a, b))
        object.__setattr__(self, "gens", frozenset(norm))

    def __len__(self):
        return len(self.gens)

    def sorted_gens(self):
        return sorted(self.gens)


def edge_ideal(g: Graph) -> MonomialIdeal2:
    """``I(g)``: one generator ``x_u x_v`` per edge of ``g``."""
    if g.m == 0:
        raise ZeroIdealError("edgeless graph: I(G) is the zero ideal")
    return MonomialIdeal2(g.n, frozenset(g.edges))


def _check_order(ideal: MonomialIdeal2, order: Sequence) -> list[tuple[int, int]]:
    seq = [tuple(sorted(u)) for u in order]
    if len(seq) != len(ideal.gens) or set(seq) != ideal.gens:
        raise SqtreeError("generator order is not a permutation of the generators")
    return seq


def _minimalize(monomials) -> list[tuple[int, ...]]:
    mons = sorted(set(monomials), key=lambda m: (len(m), m))
    kept = []
    for m in mons:
        ms = set(m)
        if not any(set(k) <= ms for k in kept):
            kept.append(m)
    return sorted(kept, key=lambda m: (len(m), m))


def colon_prefix(ideal: MonomialIdeal2, order: Sequence, i: int):
    """Minimal generators of ``<u_1, ..., u_{i-1}> : <u_i>`` (``i`` is 1-based).

    Returns
    -------
    monomials : list of tuple
        Supports of the minimal monomial generators, degree-1 first.
    variables_only : bool
        True when every minimal generator is a single variable.
    """
    seq = _check_order(ideal, order)
    if not 2 <= i <= len(seq):
        raise IndexError(f"colon index {i} outside 2..{len(seq)}")
    ui = set(seq[i - 1])
    quotients = [tuple(sorted(set(uk) - ui)) for uk in seq[: i - 1]]
    mons = _minimalize(quotients)
    return mons, all(len(m) == 1 for m in mons)


def revlex_greater(u, v, rank: Sequence[int]) -> bool:
    """``u >_revlex v`` for squarefree monomials of equal degree.

    ``rank`` lists the variables from largest to smallest.  Exponents are
    compared starting from the smallest variable; at the first difference the
    monomial with the smaller exponent is the larger one.
    """
    us, vs = set(u), set(v)
    for var in reversed(rank):
        a, b = var in us, var in vs
        if a != b:
            return a < b
    return False


def revlex_order(ideal: MonomialIdeal2, rank: Optional[Sequence[int]] = None) -> list[tuple[int, int]]:
    """Generators sorted decreasingly for revlex with ``x_{rank[0]} > x_{rank[1]} > ...``.

    The default ranking is ``x_1 > x_2 > ... > x_n``.
    """
    if rank is None:
        rank = range(1, ideal.nvars + 1)
    rank = list(rank)
    if sorted(rank) != list(range(1, ideal.nvars + 1)):
        raise SqtreeError("variable order is not a permutation")
    pos = {v: p for p, v in enumerate(rank)}
    n = ideal.nvars

    def key(u):
        # exponent vector read from the smallest variable upwards
        vec = [0] * n
        for var in u:
            vec[n - 1 - pos[var]] = 1
        return vec

    return sorted(ideal.gens, key=key)


@dataclass(frozen=True)
class LinearQuotientCertificate:
    """An admissible generator order with its colon variable sets.

    ``set_vars[i]`` holds the variables generating the colon ideal of the
    ``i``-th generator (empty for the first) and ``r[i] = len(set_vars[i])``.
    """

    order: tuple
    set_vars: tuple
    r: tuple
    backtracks: int = field(default=0, compare=False)


def verify_linear_quotients(ideal: MonomialIdeal2, order: Sequence) -> Optional[LinearQuotientCertificate]:
    seq = _check_order(ideal, order)
    set_vars = [()]
    for i in range(2, len(seq) + 1):
        mons, linear = colon_prefix(ideal, seq, i)
        if not linear:
            return None
        set_vars.append(tuple(m[0] for m in mons))
    return LinearQuotientCertificate(
        tuple(seq), tuple(set_vars), tuple(len(s) for s in set_vars)
    )


def _admissible(prefix_adj: list[int], prefix_edges: list[tuple[int, int]], u) -> bool:
    a, b = u
    ab = (1 << (a - 1)) | (1 << (b - 1))
    linear = (prefix_adj[a - 1] | prefix_adj[b - 1]) & ~ab
    for c, d in prefix_edges:
        if (1 << (c - 1)) & ab or (1 << (d - 1)) & ab:
            continue
        if not (linear >> (c - 1) & 1 or linear >> (d - 1) & 1):
            return False
    return True


def search_linear_quotients(ideal: MonomialIdeal2, cap: int = LQ_SEARCH_CAP) -> Optional[LinearQuotientCertificate]:
    """Find a linear-quotient order by depth-first backtracking.

    Candidates are tried in lexicographic order.  Whether an extension is
    admissible depends only on the *set* of generators already placed, so
    dead prefix sets are memoised.  Returns ``None`` when no order exists.
    """
    gens = ideal.sorted_gens()
    N = len(gens)
    if N > cap:
        raise CapExceededError("generator count", N, cap)
    dead = set()
    adj = [0] * ideal.nvars
    placed: list[tuple[int, int]] = []
    path: list[int] = []
    backtracks = 0

    def dfs(mask: int) -> bool:
        nonlocal backtracks
        if len(path) == N:
            return True
        if mask in dead:
            return False
        for k in range(N):
            if mask >> k & 1:
                continue
            u = gens[k]
            if not _admissible(adj, placed, u):
                continue
            a, b = u
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
            placed.append(u)
            path.append(k)
            if dfs(mask | 1 << k):
                return True
            path.pop()
            placed.pop()
            adj[a - 1] &= ~(1 << (b - 1))
            adj[b - 1] &= ~(1 << (a - 1))
            backtracks += 1
        dead.add(mask)
        return False

    if not dfs(0):
        return None
    if backtracks:
        log.info("greedy extension stalled %d times before success on %s", backtracks, gens)
    cert = verify_linear_quotients(ideal, [gens[k] for k in path])
    assert cert is not None
    return LinearQuotientCertificate(cert.order, cert.set_vars, cert.r, backtracks)


def betti_from_lq(cert: LinearQuotientCertificate) -> tuple[list[int], int]:
    """Total Betti numbers ``beta_i(I) = sum_k C(r_k, i)`` and ``projdim(I) = max r_k``."""
    pd = max(cert.r)
    return [sum(comb(r, i) for r in cert.r) for i in range(pd + 1)], pd


def format_certificate(cert: LinearQuotientCertificate) -> str:
    lines = []
    for u, s, r in zip(cert.order, cert.set_vars, cert.r):
        body = ",".join(str(v) for v in s)
        lines.append(f"u_{len(lines) + 1} = ({u[0]},{u[1]}); set = {{{body}}}; r = {r}")
    return "\n".join(lines) + "\n"
