"""Edge-list text format and DOT export.

Edge-list format::

    # optional comments
    n m
    u v        (m lines, 1-indexed, u < v)

Blank lines and ``#`` comments are ignored anywhere.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import Graph

__all__ = ["parse_edge_list", "read_edge_list", "format_edge_list", "write_edge_list", "to_dot"]


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphFormatError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty input: missing 'n m' header")
    lineno, header = lines[0]
    n, m = _ints(header, lineno, 2)
    if n < 1 or m < 0:
        raise GraphFormatError(f"invalid header n={n} m={m}", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise GraphFormatError(f"header declares {m} edges, found {len(body)}", where)
    seen = set()
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop {line!r}", lineno)
        if u > v:
            raise GraphFormatError(f"endpoints must be ascending, got {line!r}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {line!r}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_edge_list(g))


def to_dot(g: Graph, name: str = "G") -> str:
    """Undirected DOT with vertices and edges in ascending order."""
    out = [f"graph {name} {{"]
    out += [f"  {v};" for v in g.vertices]
    out += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    out.append("}")
    return "\n".join(out) + "\n"
