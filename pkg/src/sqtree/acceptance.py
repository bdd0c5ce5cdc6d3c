"""Regression checks of the classification and formula results at desk scale.

Each ``check_*`` function returns ``(passed, detail)``.  ``CRITERIA`` lists
them in order; ``run_all`` evaluates every one.  All random choices use fixed
seeds, so reruns are byte-identical.
"""

from __future__ import annotations

import random
from typing import Callable

import networkx as nx

from .betti import hochster_betti
from .chordal import find_gap, is_cochordal
from .explore import canonical_code, enumerate_trees, is_tree_square, scan_conjectures
from .graph import Graph, add_edge, cut_points, path_graph, square
from .invariants import bight, d_prime, induced_matching_number, max_independent_set
from .monomial import (
    betti_from_lq,
    edge_ideal,
    revlex_order,
    search_linear_quotients,
    verify_linear_quotients,
)
from .trees import (
    double_broom,
    double_broom_formulas,
    harary_ross_check,
    linear_resolution_by_classification,
    path_formulas,
    whiskered_star,
)

__all__ = ["CRITERIA", "run_all", "EXAMPLE_TREE", "whiskered_star_colon_table", "connected_graphs"]

# Six-vertex double star used as the running non-linear example.
EXAMPLE_TREE = Graph(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)])
EXAMPLE_TREE_GENS = {(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)}
EXAMPLE_SQUARE_GENS = EXAMPLE_TREE_GENS | {(1, 2), (1, 4), (2, 4), (5, 6), (3, 5), (3, 6)}


def _ceil_div(a, b):
    return -(-a // b)


def connected_graphs(max_n: int):
    """All connected graphs with ``2 <= n <= max_n`` (``max_n <= 7``), one per
    isomorphism class, from the networkx graph atlas."""
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(h):
            yield Graph(n, [(u + 1, v + 1) for u, v in h.edges()])


def whiskered_star_colon_table(n: int, m: int, u: tuple[int, int]) -> tuple[int, ...]:
    """Closed-form colon variables for generator ``u`` of ``I(T^2)``, ``T`` the
    partially whiskered star ``whiskered_star(n, m)`` in its fixed labeling."""
    x = lambda i: i + 1          # noqa: E731
    y = lambda j: n + 1 + j      # noqa: E731
    a, b = u
    if b <= n + 1:               # x_a x_b
        ia, ib = a - 1, b - 1
        return tuple(x(i) for i in range(ib) if i != ia)
    jb = b - n - 1
    if a == 1:                   # x_0 y_b
        return tuple([x(i) for i in range(1, n + 1)] + [y(j) for j in range(1, jb)])
    ia = a - 1                   # x_a y_a
    assert ia == jb
    return tuple(x(i) for i in range(n + 1) if i != ia)


def check_path_formulas():
    bad = []
    for n in range(3, 16):
        g = square(path_graph(n))
        got = (max_independent_set(g)[0], d_prime(g)[0], induced_matching_number(g)[0], bight(g))
        want = (_ceil_div(n, 3), n - _ceil_div(n, 5), _ceil_div(n - 1, 4), n - _ceil_div(n, 5))
        f = path_formulas(n)
        if got != want or (f.dim, f.d_prime, f.indmat, f.bight) != want:
            bad.append(f"n={n}: search {got} expected {want}")
    for n in range(3, 10):
        t = hochster_betti(square(path_graph(n)))
        want = (n - _ceil_div(n, 5), _ceil_div(n - 1, 4))
        if (t.projdim, t.reg) != want:
            bad.append(f"n={n}: oracle (pd, reg)={(t.projdim, t.reg)} expected {want}")
    return not bad, "; ".join(bad) or "n=3..15 search and n=3..9 oracle agree"


def check_path_threshold():
    got = {n: is_cochordal(square(path_graph(n))) for n in range(2, 16)}
    bad = [n for n, v in got.items() if v != (n <= 5)]
    return not bad, f"co-chordal for n={[n for n, v in got.items() if v]}"


def check_classification():
    total = mismatches = 0
    for n in range(2, 11):
        for ct in enumerate_trees(n):
            total += 1
            if linear_resolution_by_classification(ct.graph) != is_cochordal(square(ct.graph)):
                mismatches += 1
    return mismatches == 0, f"{total} trees, {mismatches} mismatches"


def check_whiskered_stars():
    bad = []
    count = 0
    for M in range(3, 10):
        for m in range(1, M):
            n = M - 1 - m
            if not 1 <= m <= n:
                continue
            count += 1
            g = square(whiskered_star(n, m))
            ideal = edge_ideal(g)
            cert = verify_linear_quotients(ideal, revlex_order(ideal))
            if cert is None:
                bad.append(f"(n={n},m={m}): revlex order has no linear quotients")
                continue
            for i, (u, sv) in enumerate(zip(cert.order, cert.set_vars)):
                if i and tuple(sorted(sv)) != whiskered_star_colon_table(n, m, u):
                    bad.append(f"(n={n},m={m}) u={u}: {sv}")
            totals, pd = betti_from_lq(cert)
            if pd != M - 2:
                bad.append(f"(n={n},m={m}): projdim(I)={pd} != {M - 2}")
            oracle = hochster_betti(g).totals()
            if oracle[1:] != totals:
                bad.append(f"(n={n},m={m}): LQ Betti {totals} vs oracle {oracle[1:]}")
    return not bad, "; ".join(bad) or f"{count} whiskered stars verified"


def check_example():
    t, t2 = EXAMPLE_TREE, square(EXAMPLE_TREE)
    out = []
    ok = set(edge_ideal(t).gens) == EXAMPLE_TREE_GENS
    out.append(f"I(T) gens {'match' if ok else 'differ'}")
    ok2 = set(edge_ideal(t2).gens) == EXAMPLE_SQUARE_GENS and len(EXAMPLE_SQUARE_GENS) == 11
    out.append(f"I(T^2) gens {'match' if ok2 else 'differ'}")
    gap = find_gap(t2)
    out.append(f"gap={gap}")
    lq_t = search_linear_quotients(edge_ideal(t)) is not None
    lq_t2 = search_linear_quotients(edge_ideal(t2)) is not None
    reg = hochster_betti(t2).reg
    out.append(f"LQ(T)={lq_t} LQ(T^2)={lq_t2} reg={reg}")
    passed = ok and ok2 and gap == ((1, 2), (5, 6)) and lq_t and not lq_t2 and reg == 2
    return passed, "; ".join(out)


def check_double_brooms():
    bad = []
    count = 0
    for n1 in (2, 3, 4):
        for n2 in (2, 3, 4):
            for k in range(2, 13):
                if n1 + n2 + k - 2 > 24:
                    continue
                count += 1
                g = square(double_broom(n1, k, n2))
                f = double_broom_formulas(n1, k, n2)
                dp = d_prime(g)[0]
                if dp != f.projdim_SI:
                    bad.append(f"({n1},{k},{n2}) d'={dp} formula {f.projdim_SI}")
                if g.n - dp != f.depth:
                    bad.append(f"({n1},{k},{n2}) depth={g.n - dp} formula {f.depth}")
                if k >= 4 and max_independent_set(g)[0] != f.dim:
                    bad.append(f"({n1},{k},{n2}) dim formula {f.dim}")
    return not bad, "; ".join(bad) or f"{count} double brooms verified"


def check_harary_ross():
    bad = []
    for n in range(2, 10):
        for ct in enumerate_trees(n):
            t = ct.graph
            g = square(t)
            is_star = any(t.degree(v) == n - 1 for v in t.vertices)
            complete = g.m == n * (n - 1) // 2
            if is_star != complete:
                bad.append(f"star/complete mismatch {ct.code}")
            if cut_points(g):
                bad.append(f"T^2 has cut-points {ct.code}")
            if not is_star and n >= 4 and not harary_ross_check(g)[0]:
                bad.append(f"rejected square {ct.code}")
    checked = 0
    for g in connected_graphs(7):
        if g.m == g.n * (g.n - 1) // 2:
            continue
        checked += 1
        if harary_ross_check(g)[0] != is_tree_square(g):
            bad.append(f"converse mismatch {g.sorted_edges()}")
    return not bad, "; ".join(bad) or f"trees n<=9 ok; {checked} graphs n<=7 agree"


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Prüfer sequence."""
    if n <= 2:
        return path_graph(n)
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(1, n + 1) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def check_free_vertex_edge(trials: int = 500, seed: int = 20240501):
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        n = rng.randint(4, 20)
        base = random_tree(n - 2, rng)
        x = rng.randint(1, n - 2)
        t = Graph(n, list(base.edges) + [(x, n - 1), (x, n)])
        hubs = [v for v in t.vertices
                if sum(1 for u in t.neighbors(v) if t.degree(u) == 1) >= 2]
        v = rng.choice(hubs)
        y1, y2 = rng.sample([u for u in t.neighbors(v) if t.degree(u) == 1], 2)
        if square(add_edge(t, y1, y2)).edges != square(t).edges:
            failures += 1
    return failures == 0, f"{trials} trees, {failures} failures"


def check_bounds(pairs: int = 200, seed: int = 7):
    bad = 0
    graphs = 0
    for g in connected_graphs(7):
        graphs += 1
        if hochster_betti(g).reg < induced_matching_number(g)[0]:
            bad += 1
    rng = random.Random(seed)
    mono_bad = 0
    for _ in range(pairs):
        n = rng.randint(2, 9)
        p = rng.choice((0.3, 0.5, 0.7))
        edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
        g = Graph(n, edges)
        w = [v for v in g.vertices if rng.random() < 0.6] or [1]
        h = Graph(len(w), [(w.index(u) + 1, w.index(v) + 1) for u, v in g.edges
                           if u in w and v in w])
        if hochster_betti(h).reg > hochster_betti(g).reg:
            mono_bad += 1
    return bad == 0 and mono_bad == 0, (
        f"{graphs} graphs: {bad} with reg < indmat; {pairs} pairs: {mono_bad} monotonicity failures")


def check_scan(n_max: int = 9):
    rows, summary = scan_conjectures(n_max)
    code = canonical_code(EXAMPLE_TREE)
    listed = code in summary.reg_increase_codes
    passed = listed and not summary.pd_violation_codes
    return passed, (f"{summary.trees_scanned} trees; example tree listed={listed}; "
                    f"{len(summary.reg_increase_codes)} reg increases; "
                    f"{len(summary.pd_violation_codes)} pd violations (within scanned range)")


CRITERIA: list[tuple[str, Callable]] = [
    ("1. path formulas", check_path_formulas),
    ("2. path linear-resolution threshold", check_path_threshold),
    ("3. classification of trees with linear I(T^2)", check_classification),
    ("4. whiskered stars: colon ideals, projdim, Betti numbers", check_whiskered_stars),
    ("5. six-vertex double star example", check_example),
    ("6. double broom projdim, depth, dim", check_double_brooms),
    ("7. square-of-tree recognition", check_harary_ross),
    ("8. free-vertex edge leaves the square unchanged", check_free_vertex_edge),
    ("9. regularity bounds", check_bounds),
    ("10. conjecture scan", check_scan),
]


def run_all(stream=None) -> bool:
    ok = True
    for name, fn in CRITERIA:
        passed, detail = fn()
        ok &= passed
        line = f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}"
        if stream is not None:
            print(line, file=stream, flush=True)
    return ok
