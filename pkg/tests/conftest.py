import json
from functools import lru_cache
from pathlib import Path

import pytest

from domgame.graphs import Graph

DATA = Path(__file__).parent / "data"


def brute_force_next_wins(g: Graph, black: int = 0) -> bool:
    """Plain negamax over chosen sets, straight from the game rules."""
    full = (1 << g.n) - 1

    @lru_cache(maxsize=None)
    def win(b):
        dominated = 0
        for u in range(g.n):
            if b >> u & 1:
                dominated |= g.closed_masks[u]
        if dominated == full:
            return False
        return any(not win(b | 1 << u) for u in range(g.n) if not b >> u & 1)

    return win(black)


@pytest.fixture(scope="session")
def small_connected_graphs():
    raw = json.loads((DATA / "connected_graphs_le7.json").read_text())
    return [Graph.from_edges(d["n"], [tuple(e) for e in d["edges"]]) for d in raw]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
