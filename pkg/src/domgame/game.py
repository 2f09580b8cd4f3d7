"""Positions of the snooker-domination game and an exact N/P solver.

A position is a partition of the vertices into black (chosen), shaded
(dominated, unchosen) and white (undominated) sets, stored as bit masks.
The player to move picks any shaded or white vertex; the game ends once no
white vertex remains and whoever moved last wins.
"""

from __future__ import annotations

import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Iterable

from .graphs import Graph

DEFAULT_BUDGET = 50_000_000
BUDGET_ENV = "DOMGAME_BUDGET"


class IllegalMove(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the outcome was settled."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Position:
    graph: Graph = field(repr=False)
    black: int
    shaded: int
    white: int

    def __post_init__(self):
        g = self.graph
        full = (1 << g.n) - 1
        b, s, w = self.black, self.shaded, self.white
        if b & s or b & w or s & w or (b | s | w) != full:
            raise ValueError("black, shaded and white must partition the vertices")
        dominated = 0
        for u in bits(b):
            dominated |= g.neighbor_masks[u]
        if dominated & ~b != s:
            raise ValueError("shaded set must be exactly the unchosen neighbors of black vertices")

    @classmethod
    def from_black(cls, graph: Graph, black: Iterable[int] | int) -> Position:
        b = black if isinstance(black, int) else mask_of(black)
        dominated = 0
        for u in bits(b):
            dominated |= graph.neighbor_masks[u]
        s = dominated & ~b
        w = ((1 << graph.n) - 1) & ~(b | s)
        return cls(graph, b, s, w)

    @property
    def trivial(self) -> bool:
        return self.white == 0

    @property
    def B(self) -> list[int]:
        return bits(self.black)

    @property
    def S(self) -> list[int]:
        return bits(self.shaded)

    @property
    def W(self) -> list[int]:
        return bits(self.white)

    def __str__(self) -> str:
        return f"B={self.B} S={self.S} W={self.W}"


def initial_position(g: Graph) -> Position:
    return Position(g, 0, 0, (1 << g.n) - 1)


def legal_moves(q: Position) -> list[int]:
    if q.trivial:
        return []
    return bits(q.shaded | q.white)


def apply_move(q: Position, u: int) -> Position:
    g = q.graph
    if not isinstance(u, int) or not 0 <= u < g.n:
        raise IllegalMove(f"vertex {u!r} is not in the graph")
    if q.trivial:
        raise IllegalMove("the game is already over")
    bit = 1 << u
    if q.black & bit:
        raise IllegalMove(f"vertex {u} has already been chosen")
    nbrs = g.neighbor_masks[u]
    return Position(
        g,
        q.black | bit,
        (q.shaded & ~bit) | (nbrs & q.white),
        q.white & ~(bit | nbrs),
    )


@dataclass
class Verdict:
    outcome: str
    winning_move: int | None = None
    nodes_expanded: int = 0
    millis: float = 0.0

    def to_dict(self, graph_name: str = "") -> dict:
        return {
            "graph": graph_name,
            "outcome": self.outcome,
            "winning_move": self.winning_move,
            "nodes": self.nodes_expanded,
            "millis": round(self.millis, 3),
        }

    def to_json(self, graph_name: str = "") -> str:
        return json.dumps(self.to_dict(graph_name))


class Solver:
    """Memoized exact search over the positions of one graph.

    The memo is keyed on ``(white, live shaded, parity of dead shaded)``
    rather than on the black set.  A shaded vertex with no white neighbor
    can never affect white vertices again, so choosing it is a pure pass;
    passes cancel in pairs, so only their parity matters.  All dead
    vertices are interchangeable, so one representative is searched.
    """

    def __init__(self, graph: Graph, budget: int | None = None):
        self.graph = graph
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.nodes = 0
        self.memo: dict[int, bool] = {}
        self._closed = graph.closed_masks
        self._nbrs = graph.neighbor_masks
        self._n = graph.n

    def _split(self, shaded: int, white: int) -> tuple[int, int]:
        live = 0
        for v in bits(shaded):
            if self._nbrs[v] & white:
                live |= 1 << v
        return live, shaded & ~live

    def _next_wins(self, white: int, live: int, dead_parity: int) -> bool:
        # white != 0 on entry
        n = self._n
        key = white | (live << n) | (dead_parity << (2 * n))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        closed = self._closed
        nbrs = self._nbrs
        movers = white | live
        m = movers
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if closed[u] & white == white:
                self.memo[key] = True
                return True
            m ^= low
        result = False
        for u in bits(white) + bits(live):
            new_white = white & ~closed[u]
            cand = (live & ~(1 << u)) | (nbrs[u] & white)
            new_live = 0
            died = 0
            c = cand
            while c:
                low = c & -c
                v = low.bit_length() - 1
                if nbrs[v] & new_white:
                    new_live |= low
                else:
                    died += 1
                c ^= low
            if not self._next_wins(new_white, new_live, (dead_parity + died) & 1):
                result = True
                break
        if not result and dead_parity:
            result = not self._next_wins(white, live, 0)
        self.memo[key] = result
        return result

    def next_wins(self, q: Position) -> bool:
        if q.trivial:
            return False
        live, dead = self._split(q.shaded, q.white)
        return self._next_wins(q.white, live, bin(dead).count("1") & 1)

    def solve(self, q: Position) -> Verdict:
        start_nodes = self.nodes
        t0 = time.perf_counter()
        limit = sys.getrecursionlimit()
        if limit < 4 * self._n + 200:
            sys.setrecursionlimit(4 * self._n + 200)
        move = None
        if self.next_wins(q):
            for u in legal_moves(q):
                if not self.next_wins(apply_move(q, u)):
                    move = u
                    break
        return Verdict(
            "P" if move is None else "N",
            move,
            self.nodes - start_nodes,
            (time.perf_counter() - t0) * 1000,
        )

    def winning_moves(self, q: Position) -> list[int]:
        return [u for u in legal_moves(q) if not self.next_wins(apply_move(q, u))]


def solve(q: Position, budget: int | None = None) -> Verdict:
    """Exact outcome of ``q``; N verdicts carry the lowest-index winning move."""
    return Solver(q.graph, budget).solve(q)


def winning_moves(q: Position, budget: int | None = None) -> list[int]:
    return Solver(q.graph, budget).winning_moves(q)
