"""Exact analysis of the snooker-domination game on graphs."""

from .game import (
    BudgetExceeded,
    IllegalMove,
    Position,
    Solver,
    Verdict,
    apply_move,
    initial_position,
    legal_moves,
    solve,
    winning_moves,
)
from .graphs import Graph, GroupSpec
from .involutions import Involution, find_involution
from .paths import PathComponent, PathPosition, classify_standard, parse_position, solve_path_sum

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GroupSpec",
    "IllegalMove",
    "Involution",
    "PathComponent",
    "PathPosition",
    "Position",
    "Solver",
    "Verdict",
    "apply_move",
    "classify_standard",
    "find_involution",
    "initial_position",
    "legal_moves",
    "parse_position",
    "solve",
    "solve_path_sum",
    "winning_moves",
]
