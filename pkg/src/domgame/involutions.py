"""Search for d-involutions: order-two automorphisms moving every vertex distance >= d."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, GraphError

DEFAULT_MAX_VERTICES = 64


class InvolutionBudgetExceeded(RuntimeError):
    """The graph is larger than the search is allowed to handle."""


@dataclass(frozen=True)
class Involution:
    perm: tuple[int, ...]
    d: int

    def __call__(self, v: int) -> int:
        return self.perm[v]

    def cycles(self) -> list[tuple[int, int]]:
        return [(v, w) for v, w in enumerate(self.perm) if v < w]

    def __str__(self) -> str:
        return "".join(f"({a} {b})" for a, b in self.cycles())


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def displacement(g: Graph, perm: Sequence[int]) -> float:
    """Smallest distance between a vertex and its image (inf if all unreachable)."""
    best = float("inf")
    for v, w in enumerate(perm):
        dist = g.distances[v][w]
        if dist is not None:
            best = min(best, dist)
    return best


def certify(g: Graph, perm: Sequence[int], d: int) -> Involution:
    """Validate ``perm`` as a d-involution of ``g`` by direct recomputation."""
    perm = tuple(perm)
    if len(perm) != g.n or not is_automorphism(g, perm):
        raise GraphError("map is not an automorphism")
    if any(perm[perm[v]] != v for v in range(g.n)) or perm == tuple(range(g.n)):
        raise GraphError("map is not an involution")
    if displacement(g, perm) < d:
        raise GraphError(f"some vertex moves less than distance {d}")
    return Involution(perm, d)


def _search_order(g: Graph) -> list[int]:
    order = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def find_involution(g: Graph, d: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Involution | None:
    """Exhaustive backtracking for a d-involution; ``None`` when none exists."""
    if d < 1:
        raise GraphError("required distance must be at least 1")
    if g.n > max_vertices:
        raise InvolutionBudgetExceeded(f"{g.n} vertices exceeds the search cap of {max_vertices}")
    if g.n == 0:
        return None
    order = _search_order(g)
    dist = g.distances
    adj = g.neighbor_masks
    perm = [-1] * g.n
    assigned: list[int] = []

    def far_enough(v, w):
        dvw = dist[v][w]
        return dvw is None or dvw >= d

    def consistent(v, w):
        # v -> w and w -> v must preserve adjacency with everything fixed so far
        for a in assigned:
            pa = perm[a]
            if bool(adj[v] >> a & 1) != bool(adj[w] >> pa & 1):
                return False
            if bool(adj[w] >> a & 1) != bool(adj[v] >> pa & 1):
                return False
        return True

    def extend(pos):
        while pos < len(order) and perm[order[pos]] >= 0:
            pos += 1
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(g.n):
            if w == v or perm[w] >= 0 or g.degree(w) != g.degree(v):
                continue
            if not far_enough(v, w) or not consistent(v, w):
                continue
            perm[v], perm[w] = w, v
            assigned.extend((v, w))
            if extend(pos + 1):
                return True
            assigned.pop()
            assigned.pop()
            perm[v] = perm[w] = -1
        return False

    if not extend(0):
        return None
    return certify(g, perm, d)
