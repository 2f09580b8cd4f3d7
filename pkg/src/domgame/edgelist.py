"""Plain-text edge lists.

Format::

    # optional name
    n m
    u v        (m lines, 0-indexed, u < v)
"""

from __future__ import annotations

from pathlib import Path

from .graphs import Graph, GraphError


def parse_edgelist(text: str) -> Graph:
    name = ""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if not name:
                name = line[1:].strip()
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
    if not rows:
        raise GraphError("empty edge list: missing 'n m' header")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphError("vertex and edge counts must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} follow")
    seen = set()
    for lineno, u, v in body:
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
    return Graph.from_edges(n, sorted(seen), name)


def format_edgelist(g: Graph) -> str:
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path) -> None:
    Path(path).write_text(format_edgelist(g))
