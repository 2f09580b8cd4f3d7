"""Immutable simple graphs and the constructions used by the domination game.

Vertices are always ``0..n-1``.  Every constructor fixes a deterministic
labeling (row-major for products, concatenation order for joins, danglings
and bridgings) so that positions and winning moves are reproducible.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or invalid constructor parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {u} must be sorted and distinct")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphError(f"edge {u}-{v} leaves the vertex range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise GraphError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} leaves the vertex range 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name)

    def renamed(self, name: str) -> Graph:
        return Graph(self.n, self.adjacency, name)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def check_vertex(self, u: int) -> None:
        if not isinstance(u, int) or not 0 <= u < self.n:
            raise GraphError(f"vertex {u!r} not in 0..{self.n - 1}")

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bit masks."""
        return tuple(sum(1 << v for v in nbrs) for nbrs in self.adjacency)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << u) for u, m in enumerate(self.neighbor_masks))

    @cached_property
    def distances(self) -> tuple[tuple[int | None, ...], ...]:
        """All-pairs hop distances; ``None`` marks unreachable pairs."""
        return tuple(tuple(_bfs(self, s)) for s in range(self.n))

    def is_connected(self) -> bool:
        return self.n == 0 or all(d is not None for d in self.distances[0])

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


def _bfs(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Shortest-path hop count between ``u`` and ``v``, or ``None`` if unreachable."""
    g.check_vertex(u)
    g.check_vertex(v)
    return g.distances[u][v]


# -- basic families ---------------------------------------------------------

def empty_graph(n: int = 0) -> Graph:
    return Graph.from_edges(n, [], f"E{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    return Graph.from_edges(n, itertools.combinations(range(n), 2), f"K{n}")


def star(m: int) -> Graph:
    """K_{1,m} with the center at vertex 0 and leaves 1..m."""
    if m < 1:
        raise GraphError("star needs at least one leaf")
    return Graph.from_edges(m + 1, [(0, i) for i in range(1, m + 1)], f"K1,{m}")


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges, " + ".join(g.name or "?" for g in graphs))


# -- operations -------------------------------------------------------------

def power(g: Graph, d: int) -> Graph:
    """Graph on the same vertices with an edge whenever the distance is 1..d."""
    if d < 1:
        raise GraphError("power radius must be at least 1")
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (dist := g.distances[u][v]) is not None and dist <= d
    ]
    return Graph.from_edges(g.n, edges, f"{g.name}^({d})" if g.name else "")


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product; vertex (u, v) gets index ``u * g2.n + v``."""
    if g1.n == 0 or g2.n == 0:
        raise GraphError("cartesian product factors must be nonempty")
    n2 = g2.n
    edges = [(u * n2 + a, u * n2 + b) for u in range(g1.n) for a, b in g2.edges()]
    edges += [(a * n2 + v, b * n2 + v) for a, b in g1.edges() for v in range(n2)]
    name = f"{g1.name} x {g2.name}" if g1.name and g2.name else ""
    return Graph.from_edges(g1.n * n2, edges, name)


def product_of(graphs: Sequence[Graph]) -> Graph:
    result = graphs[0]
    for g in graphs[1:]:
        result = cartesian_product(result, g)
    return result


def join(g: Graph, x: int, h: Graph, y: int) -> tuple[Graph, list[int]]:
    """Identify ``x`` in ``g`` with ``y`` in ``h``.

    Returns the joined graph and a table mapping each vertex of ``h`` to its
    new index; ``table[y] == x`` is the identified vertex.  The vertices of
    ``g`` keep their labels and the rest of ``h`` follows in order.
    """
    graph, tables = dangle(g, [x], [(h, y)])
    return graph, tables[0]


def dangle(g: Graph, xs: Sequence[int], hs: Sequence[tuple[Graph, int]]) -> tuple[Graph, list[list[int]]]:
    """Parallel joins: ``hs[i]`` is glued onto ``g`` at ``xs[i]``."""
    if len(xs) != len(hs):
        raise GraphError("dangle needs one attachment vertex per graph")
    if len(set(xs)) != len(xs):
        raise GraphError("dangle attachment vertices must be distinct")
    for x in xs:
        g.check_vertex(x)
    edges = list(g.edges())
    offset = g.n
    tables = []
    for x, (h, y) in zip(xs, hs):
        h.check_vertex(y)
        table = []
        for w in range(h.n):
            if w == y:
                table.append(x)
            else:
                table.append(offset)
                offset += 1
        edges.extend((table[a], table[b]) for a, b in h.edges())
        tables.append(table)
    return Graph.from_edges(offset, edges), tables


def bridge(g: Graph, x: int, hs: Sequence[tuple[Graph, int]]) -> tuple[Graph, list[list[int]]]:
    """Disjoint copies of each ``h`` with an edge from ``x`` to its ``y``."""
    g.check_vertex(x)
    edges = list(g.edges())
    offset = g.n
    tables = []
    for h, y in hs:
        h.check_vertex(y)
        table = list(range(offset, offset + h.n))
        edges.extend((table[a], table[b]) for a, b in h.edges())
        edges.append((x, table[y]))
        tables.append(table)
        offset += h.n
    return Graph.from_edges(offset, edges), tables


# -- named families ---------------------------------------------------------

def sunlet(k: int) -> Graph:
    """C_k with a pendant at every cycle vertex; pendant of i is ``k + i``."""
    c = cycle(k)
    g, _ = dangle(c, list(range(k)), [(path(2), 0)] * k)
    return g.renamed(f"S{k}")


def even_caterpillar(r: int, spine: int) -> Graph:
    """Internally r-regular caterpillar whose spine has ``spine`` vertices.

    Spine is ``0..spine-1``; the ``r - 2`` leaves of internal spine vertex
    ``i`` follow in order of ``i``.
    """
    if r < 3:
        raise GraphError("caterpillar internal degree must be at least 3")
    if spine < 2 or spine % 2:
        raise GraphError("even caterpillar needs an even spine of length >= 2")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(1, spine - 1):
        for _ in range(r - 2):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges, f"Cat(r={r},spine={spine})")


def kneser_subsets(m: int, t: int) -> list[tuple[int, ...]]:
    """Vertex labels of K(m, t): sorted t-subsets of 1..m in lexicographic order."""
    return list(itertools.combinations(range(1, m + 1), t))


def kneser(m: int, t: int) -> Graph:
    if t < 1 or m < 2 * t + 1:
        raise GraphError("kneser graph needs t >= 1 and m >= 2t + 1")
    subsets = kneser_subsets(m, t)
    edges = [
        (i, j)
        for i, a in enumerate(subsets)
        for j in range(i + 1, len(subsets))
        if not set(a) & set(subsets[j])
    ]
    return Graph.from_edges(len(subsets), edges, f"K({m},{t})")


def petersen() -> Graph:
    return kneser(5, 2).renamed("Petersen")


def hypercube(d: int) -> Graph:
    """P_2^d; vertex index is the binary word with the first factor most significant."""
    if d < 1:
        raise GraphError("hypercube dimension must be at least 1")
    return product_of([path(2)] * d).renamed(f"Q{d}")


def grid(k: int, m: int) -> Graph:
    return cartesian_product(path(k), path(m)).renamed(f"P{k} x P{m}")


def torus(*ns: int) -> Graph:
    return product_of([cycle(n) for n in ns]).renamed(" x ".join(f"C{n}" for n in ns))


# -- Cayley graphs of finite abelian groups --------------------------------

@dataclass(frozen=True)
class GroupSpec:
    """Z_{n_1} x ... x Z_{n_d} with an inverse-closed generating set."""

    moduli: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.moduli or any(n < 2 for n in self.moduli):
            raise GraphError("every modulus must be at least 2")
        gens = {self.reduce(g) for g in self.generators}
        zero = (0,) * len(self.moduli)
        if zero in gens:
            raise GraphError("generators must be nonzero")
        for g in gens:
            if self.negate(g) not in gens:
                raise GraphError(f"generator set is not closed under negation: missing -{g}")
        seen = {zero}
        frontier = [zero]
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = self.add(a, g)
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
        if len(seen) != self.order:
            raise GraphError("generators do not generate the group")

    @classmethod
    def canonical(cls, moduli: Sequence[int]) -> GroupSpec:
        d = len(moduli)
        gens = []
        for j in range(d):
            e = tuple(1 if i == j else 0 for i in range(d))
            gens.append(e)
            gens.append(tuple((-a) % n for a, n in zip(e, moduli)))
        return cls(tuple(moduli), tuple(sorted(set(gens))))

    @classmethod
    def cyclic(cls, n: int, k: int) -> GroupSpec:
        """Z_n with generators +-1..+-k."""
        gens = {(s % n,) for j in range(1, k + 1) for s in (j, -j)}
        return cls((n,), tuple(sorted(gens)))

    @property
    def order(self) -> int:
        out = 1
        for n in self.moduli:
            out *= n
        return out

    def reduce(self, g: Sequence[int]) -> tuple[int, ...]:
        if len(g) != len(self.moduli):
            raise GraphError(f"element {g} has the wrong arity")
        return tuple(a % n for a, n in zip(g, self.moduli))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def negate(self, a) -> tuple[int, ...]:
        return tuple((-x) % n for x, n in zip(a, self.moduli))

    def elements(self) -> list[tuple[int, ...]]:
        """Mixed-radix enumeration; element index matches the product labeling."""
        return list(itertools.product(*(range(n) for n in self.moduli)))

    def index(self, g: Sequence[int]) -> int:
        idx = 0
        for a, n in zip(self.reduce(g), self.moduli):
            idx = idx * n + a
        return idx


def cayley_abelian(spec: GroupSpec) -> Graph:
    gens = {spec.reduce(g) for g in spec.generators}
    edges = set()
    for g in spec.elements():
        i = spec.index(g)
        for s in gens:
            j = spec.index(spec.add(g, s))
            edges.add((min(i, j), max(i, j)))
    name = "Cay(" + " x ".join(f"Z{n}" for n in spec.moduli) + ")"
    return Graph.from_edges(spec.order, sorted(edges), name)
