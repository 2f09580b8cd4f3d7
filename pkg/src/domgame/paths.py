"""Game sums of paths whose endpoints may be pre-shaded.

A component ``P{k}^{i}`` is a path on ``k`` white-interior vertices with
``i`` shaded endpoints.  Chosen vertices are deleted, so a move splits a
component into at most two fragments whose new endpoints are shaded.
For ``i == 1`` the shaded endpoint is taken to be vertex 0.

A position is *standard* when every endpoint is shaded.  Standard
positions have a closed-form outcome (:func:`classify_standard`); any
position can be solved by :func:`solve_path_sum`.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .game import DEFAULT_BUDGET, BudgetExceeded, Position
from .graphs import Graph


class NotationError(ValueError):
    def __init__(self, message: str, text: str = "", column: int | None = None):
        self.text = text
        self.column = column
        if column is not None:
            message = f"{message}\n  {text}\n  {' ' * column}^"
        super().__init__(message)


class NotStandard(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PathComponent:
    k: int
    i: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a path component needs at least one vertex")
        if not 0 <= self.i <= min(self.k, 2):
            raise ValueError(f"P{self.k} cannot have {self.i} shaded endpoints")

    @property
    def white(self) -> int:
        return self.k - self.i

    @property
    def standard(self) -> bool:
        return self.i == min(self.k, 2)

    def __str__(self) -> str:
        return f"P{self.k}^{self.i}"


def std(k: int) -> PathComponent:
    """The standard component on ``k`` vertices."""
    return PathComponent(k, min(k, 2))


@dataclass(frozen=True)
class PathPosition:
    components: tuple[PathComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @classmethod
    def of(cls, *items) -> PathPosition:
        """Build from components, ``(k, i)`` pairs or bare ``k`` (standard)."""
        comps = []
        for it in items:
            if isinstance(it, PathComponent):
                comps.append(it)
            elif isinstance(it, int):
                comps.append(std(it))
            else:
                comps.append(PathComponent(*it))
        return cls(tuple(comps))

    def __add__(self, other: PathPosition) -> PathPosition:
        return PathPosition(self.components + other.components)

    def __len__(self) -> int:
        return len(self.components)

    @property
    def vertices(self) -> int:
        return sum(c.k for c in self.components)

    @property
    def white(self) -> int:
        return sum(c.white for c in self.components)

    @property
    def shaded(self) -> int:
        return sum(c.i for c in self.components)

    @property
    def trivial(self) -> bool:
        return self.white == 0

    @property
    def standard(self) -> bool:
        return all(c.standard for c in self.components)

    def without(self, index: int) -> tuple[PathComponent, ...]:
        return self.components[:index] + self.components[index + 1:]

    def __str__(self) -> str:
        return " + ".join(map(str, self.components)) if self.components else "0"


_TERM = re.compile(r"\s*[pP]\s*(\d+)\s*(?:\^\s*(\d+))?\s*")


def parse_position(text: str) -> PathPosition:
    """Parse ``"P7^0 + P3^2 + P1^1"``; a term without ``^`` is standard."""
    if not text.strip():
        raise NotationError("empty position", text, 0)
    comps = []
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise NotationError("expected a term like P5^2", text, col)
        k = int(m.group(1))
        try:
            if m.group(2) is None:
                comp = std(k) if k else None
            else:
                comp = PathComponent(k, int(m.group(2)))
        except ValueError as exc:
            raise NotationError(str(exc), text, m.start(1)) from None
        if comp is not None:
            comps.append(comp)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise NotationError("expected '+' between terms", text, pos)
        pos += 1
    return PathPosition(tuple(comps))


def format_position(q: PathPosition) -> str:
    return str(q)


# -- moves ------------------------------------------------------------------

def component_moves(c: PathComponent, j: int) -> PathPosition:
    """Fragments left after choosing vertex ``j`` of ``c``."""
    if not 0 <= j < c.k:
        raise IndexError(f"vertex {j} outside P{c.k}")
    left_shaded = c.i >= 1
    right_shaded = c.i == 2 or (c.k == 1 and c.i == 1)
    parts = []
    if j >= 1:
        parts.append(PathComponent(1, 1) if j == 1 else PathComponent(j, 1 + left_shaded))
    r = c.k - 1 - j
    if r >= 1:
        parts.append(PathComponent(1, 1) if r == 1 else PathComponent(r, 1 + right_shaded))
    return PathPosition(tuple(parts))


def move(q: PathPosition, index: int, j: int) -> PathPosition:
    return PathPosition(q.without(index) + component_moves(q.components[index], j).components)


def _distinct_moves(c: PathComponent) -> range:
    # reflection symmetry halves the moves of components shaded alike at both ends
    if c.i == 1 and c.k > 1:
        return range(c.k)
    return range((c.k + 1) // 2)


def children(q: PathPosition) -> Iterator[tuple[int, int, PathPosition]]:
    """All ``(component index, vertex, child)`` triples, one per vertex."""
    for idx, c in enumerate(q.components):
        for j in range(c.k):
            yield idx, j, move(q, idx, j)


# -- standard-position calculus ---------------------------------------------

def _require_standard(q: PathPosition) -> None:
    if not q.standard:
        raise NotStandard(f"{q} is not standard: every endpoint must be shaded")


def counters(q: PathPosition) -> tuple[int, int, int]:
    """(one, four, odd): components on 1 vertex, 4 vertices, an odd number of vertices."""
    _require_standard(q)
    ks = [c.k for c in q.components]
    return ks.count(1), ks.count(4), sum(k % 2 for k in ks)


def is_even(q: PathPosition) -> bool:
    _require_standard(q)
    return (q.white + q.shaded) % 2 == 0


def is_totally_even(q: PathPosition) -> bool:
    one, four, _ = counters(q)
    return q.white % 2 == 0 and one % 2 == 0 and four % 2 == 0


def totally_even_move(q: PathPosition) -> tuple[int, int]:
    """A move ``(component index, vertex)`` leaving a totally even position.

    Requires ``q`` standard, nontrivial and with an odd number of unchosen
    vertices.
    """
    _require_standard(q)
    if q.trivial:
        raise ValueError("position is trivial")
    if (q.white + q.shaded) % 2 == 0:
        raise ValueError("needs an odd number of unchosen vertices")
    one, four, _ = counters(q)
    ks = [c.k for c in q.components]
    if four % 2:
        # interior of a P4 makes a P1, an endpoint does not
        return ks.index(4), 1 if one % 2 else 0
    if one % 2:
        return ks.index(1), 0
    idx = next(i for i, k in enumerate(ks) if k >= 3 and k % 2)
    return idx, (ks[idx] - 1) // 2


def _exceptional(q: PathPosition) -> bool:
    # P1 and P2 components are pure passes; only their parity matters
    rest = Counter(c.k for c in q.components if c.k != 2)
    m = rest.pop(1, 0)
    if rest == Counter({3: 2}):
        return m % 2 == 0
    if rest == Counter({3: 1, 4: 1}):
        return m % 2 == 1
    if rest == Counter({3: 3}):
        return m % 2 == 1
    return False


@dataclass
class PathVerdict:
    outcome: str
    move: tuple[int, int] | None = None
    engine: str = "closed-form"
    nodes: int = 0


def classify_standard(q: PathPosition) -> PathVerdict:
    """Closed-form outcome of a nontrivial standard position, with no search.

    With ``m`` single-vertex and any number of two-vertex components, the
    position is P exactly when it is even with at least four white
    vertices, or its remaining components are ``P3 + P3`` with ``m`` even,
    ``P4 + P3`` with ``m`` odd, or ``P3 + P3 + P3`` with ``m`` odd.
    N verdicts carry a winning move.
    """
    _require_standard(q)
    if q.trivial:
        raise ValueError("classification needs a nontrivial position")
    if not is_even(q):
        return PathVerdict("N", totally_even_move(q))
    if q.white >= 4 or _exceptional(q):
        return PathVerdict("P")
    return PathVerdict("N", _short_game_move(q))


def _short_game_move(q: PathPosition) -> tuple[int, int]:
    # even, fewer than four white vertices, not exceptional: the white
    # vertices sit consecutively in one P3, P4 or P5
    ks = [c.k for c in q.components]
    idx = next(i for i, k in enumerate(ks) if k in (3, 4, 5))
    return idx, (ks[idx] - 1) // 2


# -- exact solver for arbitrary sums ----------------------------------------

def reduce_position(q: PathPosition) -> tuple[PathComponent, ...]:
    """Canonical key with the pass components reduced to their parity.

    ``P1^1`` and ``P2^2`` hold only shaded vertices with no white neighbor,
    so choosing one of their vertices is a pass.  Two passes cancel, which
    leaves at most one ``P1^1``.  Equal components carrying white vertices
    do *not* cancel in general: ``P1^1 + P3^2 + P3^2`` is won by Next.
    """
    passes = 0
    live = []
    for c in q.components:
        if c.white == 0:
            passes += c.i
        else:
            live.append(c)
    if passes % 2:
        live.append(PathComponent(1, 1))
    return tuple(sorted(live))


class PathSolver:
    def __init__(self, budget: int | None = None):
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.nodes = 0
        self.memo: dict[tuple[PathComponent, ...], bool] = {}

    def next_wins(self, q: PathPosition) -> bool:
        return self._next_wins(reduce_position(q))

    def _next_wins(self, key: tuple[PathComponent, ...]) -> bool:
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if all(c.white == 0 for c in key):
            self.memo[key] = False
            return False
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        result = False
        seen = set()
        for idx, c in enumerate(key):
            if c in seen:
                continue
            seen.add(c)
            rest = key[:idx] + key[idx + 1:]
            for j in _distinct_moves(c):
                child = PathPosition(rest + component_moves(c, j).components)
                if not self._next_wins(reduce_position(child)):
                    result = True
                    break
            if result:
                break
        self.memo[key] = result
        return result

    def solve(self, q: PathPosition) -> PathVerdict:
        start = self.nodes
        if not self.next_wins(q):
            return PathVerdict("P", None, "search", self.nodes - start)
        for idx, j, child in children(q):
            if not self.next_wins(child):
                return PathVerdict("N", (idx, j), "search", self.nodes - start)
        raise AssertionError("N position without a winning move")

    def winning_moves(self, q: PathPosition) -> list[tuple[int, int]]:
        return [(idx, j) for idx, j, child in children(q) if not self.next_wins(child)]


def solve_path_sum(q: PathPosition, budget: int | None = None) -> PathVerdict:
    return PathSolver(budget).solve(q)


def classify(q: PathPosition, budget: int | None = None) -> PathVerdict:
    """Closed form when it applies, exact search otherwise."""
    if q.standard and not q.trivial:
        return classify_standard(q)
    return solve_path_sum(q, budget)


# -- enumeration and graph realization --------------------------------------

def _multisets(items: list, total: int, start: int = 0) -> Iterator[tuple]:
    yield ()
    for idx in range(start, len(items)):
        size, item = items[idx]
        if size <= total:
            for rest in _multisets(items, total - size, idx):
                yield (item,) + rest


def standard_positions(max_vertices: int) -> Iterator[PathPosition]:
    """Every standard position with at most ``max_vertices`` vertices (including the empty one)."""
    items = [(k, std(k)) for k in range(1, max_vertices + 1)]
    for combo in _multisets(items, max_vertices):
        yield PathPosition(combo)


def all_positions(max_vertices: int) -> Iterator[PathPosition]:
    """Every path sum with at most ``max_vertices`` vertices."""
    items = [
        (k, PathComponent(k, i))
        for k in range(1, max_vertices + 1)
        for i in range(min(k, 2) + 1)
    ]
    for combo in _multisets(items, max_vertices):
        yield PathPosition(combo)


def to_position(q: PathPosition) -> tuple[Position, list[list[int]]]:
    """Realize ``q`` as a graph position.

    Each shaded endpoint gets a pendant black vertex, so the graph position
    satisfies the usual closure rules exactly.  Returns the position and,
    per component, the graph vertex of each path vertex.
    """
    edges: list[tuple[int, int]] = []
    layout = []
    nxt = 0
    for c in q.components:
        verts = list(range(nxt, nxt + c.k))
        nxt += c.k
        edges.extend(zip(verts, verts[1:]))
        layout.append(verts)
    black = []
    for c, verts in zip(q.components, layout):
        ends = [verts[0]] if c.i == 1 else [verts[0], verts[-1]] if c.i == 2 else []
        for e in ends:
            edges.append((e, nxt))
            black.append(nxt)
            nxt += 1
    g = Graph.from_edges(nxt, edges, str(q))
    return Position.from_black(g, black), layout

