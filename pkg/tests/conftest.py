"""Brute-force oracles and hypothesis strategies shared by the test modules.

Every oracle here works straight from a definition, by exhaustive
enumeration, so it shares no code path with the library searches.
"""

from itertools import combinations, product

from hypothesis import strategies as st

from sqtree.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(1, v - 1)) for v in range(2, n + 1)]
    return Graph(n, [(p, v) for v, p in zip(range(2, n + 1), parents)])


def subsets(items, min_size=0):
    items = list(items)
    for k in range(min_size, len(items) + 1):
        yield from combinations(items, k)


def independent(g, s):
    return all(not g.has_edge(u, v) for u, v in combinations(s, 2))


def brute_mis(g):
    return max(len(s) for s in subsets(g.vertices) if independent(g, s))


def brute_indmat(g):
    edges = g.sorted_edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for sel in combinations(edges, k):
            vs = [v for e in sel for v in e]
            if len(set(vs)) < 2 * k:
                continue
            induced = sum(1 for u, v in combinations(vs, 2) if g.has_edge(u, v))
            if induced == k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def brute_minimal_covers(g):
    covers = [set(s) for s in subsets(g.vertices)
              if all(u in s or v in s for u, v in g.edges)]
    return [c for c in covers if not any(d < c for d in covers)]


def brute_bight(g):
    if g.m == 0:
        return 0
    return max(len(c) for c in brute_minimal_covers(g))


def brute_maximal_cliques(g):
    cl = [set(s) for s in subsets(g.vertices, 1)
          if all(g.has_edge(u, v) for u, v in combinations(s, 2))]
    return sorted(sorted(c) for c in cl if not any(c < d for d in cl))


def brute_is_chordal(g):
    for s in subsets(g.vertices, 4):
        deg = [sum(1 for u in s if g.has_edge(u, v)) for v in s]
        if all(d == 2 for d in deg) and _connected_on(g, s):
            return False
    return True


def _connected_on(g, s):
    s = set(s)
    start = next(iter(s))
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in s and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def brute_d_prime(g):
    """Largest flower count over semi-strongly disjoint bouquet sets, by
    assigning every non-root vertex to nothing or to an adjacent root."""
    best = 0
    for roots in subsets(g.vertices, 1):
        if not independent(g, roots):
            continue
        others = [v for v in g.vertices if v not in roots]
        choices = [[None] + [r for r in roots if g.has_edge(r, v)] for v in others]
        for assign in product(*choices):
            owners = {a for a in assign if a is not None}
            if len(owners) == len(roots):
                best = max(best, sum(a is not None for a in assign))
    return best


def brute_gaps(g):
    out = []
    edges = g.sorted_edges()
    for e, f in combinations(edges, 2):
        if set(e) & set(f):
            continue
        if not any(g.has_edge(a, b) for a in e for b in f):
            out.append((e, f))
    return out


def brute_square(g):
    edges = set(g.edges)
    for u, v in combinations(g.vertices, 2):
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            edges.add((u, v))
    return Graph(g.n, edges)
