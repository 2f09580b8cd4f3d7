"""Deterministic playing policies and game playouts."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .game import Position, Solver, apply_move, bits, legal_moves
from .involutions import Involution


class StrategyError(RuntimeError):
    """A policy could not produce a legal move for the given position."""


@dataclass
class Strategy:
    kind: str
    policy: Callable[[Position], int] = field(repr=False)

    def __call__(self, q: Position) -> int:
        u = self.policy(q)
        if u not in legal_moves(q):
            raise StrategyError(f"{self.kind} strategy chose illegal vertex {u}")
        return u


def _pairing_policy(perm, kind):
    perm = tuple(perm)

    def policy(q: Position) -> int:
        # exactly one chosen vertex has an unchosen partner: the opponent's last move
        open_pairs = [u for u in bits(q.black) if not q.black >> perm[u] & 1]
        if len(open_pairs) != 1:
            raise StrategyError(f"{kind}: expected one unanswered move, found {open_pairs}")
        return perm[open_pairs[0]]

    return policy


def involution_strategy(inv: Involution) -> Strategy:
    """Answer every move u with its image under the involution."""
    return Strategy("involution-pairing", _pairing_policy(inv.perm, "involution-pairing"))


def bridge_pairing(base_n: int, copies: int) -> tuple[int, ...]:
    """Copy-swap map on ``bridge(G0, x, [(G0, x)] * copies)``.

    Copy ``c`` (``c = 0`` is the base) occupies indices ``c*base_n ..``;
    copies are paired ``(0, 1), (2, 3), ...``, so ``copies`` must be odd.
    """
    if copies % 2 == 0:
        raise ValueError("mirroring needs an odd number of bridged copies")
    return tuple((c ^ 1) * base_n + v for c in range(copies + 1) for v in range(base_n))


def mirror_strategy(pairing) -> Strategy:
    return Strategy("mirror", _pairing_policy(pairing, "mirror"))


def optimal_strategy(solver: Solver) -> Strategy:
    """Lowest-index winning move; lowest-index legal move from P positions."""

    def policy(q: Position) -> int:
        moves = legal_moves(q)
        for u in moves:
            if not solver.next_wins(apply_move(q, u)):
                return u
        return moves[0]

    return Strategy("optimal-from-solver", policy)


def first_legal_strategy() -> Strategy:
    return Strategy("first-legal", lambda q: legal_moves(q)[0])


def random_strategy(seed: int = 0) -> Strategy:
    rng = random.Random(seed)
    return Strategy("uniform-random", lambda q: rng.choice(legal_moves(q)))


@dataclass
class Transcript:
    moves: list[int]
    white_after: list[int]
    winner: int  # 1 or 2

    def to_dict(self) -> dict:
        return {
            "moves": [{"vertex": u, "white": w} for u, w in zip(self.moves, self.white_after)],
            "winner": self.winner,
        }


def play(q: Position, s1: Strategy, s2: Strategy) -> Transcript:
    """Alternate s1, s2 from ``q`` until no white vertex remains."""
    moves, whites = [], []
    players = (s1, s2)
    while not q.trivial:
        u = players[len(moves) % 2](q)
        q = apply_move(q, u)
        moves.append(u)
        whites.append(bin(q.white).count("1"))
    # an already-trivial start counts as a win for the player who did not move
    winner = 2 if not moves else 1 + (len(moves) - 1) % 2
    return Transcript(moves, whites, winner)


def losing_line(q: Position, responder: Strategy) -> list[int] | None:
    """Search every first-player move sequence against ``responder``.

    Returns a move sequence after which the first player has won, or
    ``None`` if ``responder`` (moving second) wins every playout.
    """
    safe: set[int] = set()

    def walk(q, line):
        if q.black in safe:
            return None
        for u in legal_moves(q):
            after = apply_move(q, u)
            if after.trivial:
                return line + [u]
            try:
                v = responder(after)
            except StrategyError:
                return line + [u]
            reply = apply_move(after, v)
            if reply.trivial:
                continue
            bad = walk(reply, line + [u, v])
            if bad is not None:
                return bad
        safe.add(q.black)
        return None

    return walk(q, [])
