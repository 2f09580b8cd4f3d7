"""Command-line interface: ``domgame <command> ...``.

Exit codes: 0 ok, 1 usage or input error, 2 a claim disagreed with the
solver, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graphs as G
from .edgelist import format_edgelist, read_edgelist
from .game import (
    BudgetExceeded,
    IllegalMove,
    Solver,
    apply_move,
    default_budget,
    initial_position,
    legal_moves,
)
from .involutions import InvolutionBudgetExceeded, find_involution
from .paths import NotationError, classify, parse_position
from .strategies import optimal_strategy
from .verify import FAMILIES, ClaimError, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_BUDGET = 0, 1, 2, 3

GRAPH_FAMILIES = {
    "path": G.path,
    "cycle": G.cycle,
    "complete": G.complete,
    "star": G.star,
    "kneser": G.kneser,
    "petersen": G.petersen,
    "hypercube": G.hypercube,
    "grid": G.grid,
    "torus": G.torus,
    "sunlet": G.sunlet,
    "caterpillar": G.even_caterpillar,
    "cpower": lambda n, k: G.power(G.cycle(n), k).renamed(f"C{n}^({k})"),
    "cayley": lambda *ns: G.cayley_abelian(G.GroupSpec.canonical(ns)),
}


class UsageError(Exception):
    pass


def family_graph(text: str) -> G.Graph:
    """Build a graph from ``name:p1:p2`` (an optional ``family:`` prefix is ignored)."""
    parts = text.split(":")
    if parts[0] == "family":
        parts = parts[1:]
    if not parts or not parts[0]:
        raise UsageError(f"missing family name in {text!r}")
    name, raw = parts[0], parts[1:]
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise UsageError(f"family parameters must be integers: {text!r}") from None
    if name in GRAPH_FAMILIES:
        builder = GRAPH_FAMILIES[name]
        try:
            g = builder(*params)
        except TypeError:
            raise UsageError(f"wrong number of parameters for family {name!r}") from None
    elif name in FAMILIES:
        try:
            g = FAMILIES[name].build(*params)[0]
        except TypeError:
            raise UsageError(f"wrong number of parameters for family {name!r}") from None
    else:
        known = ", ".join(sorted(set(GRAPH_FAMILIES) | set(FAMILIES)))
        raise UsageError(f"unknown family {name!r}; known: {known}")
    if not g.name:
        g = g.renamed(":".join(parts))
    return g


def load_graph(text: str) -> G.Graph:
    if text.startswith("family:"):
        return family_graph(text)
    path = Path(text)
    if path.exists():
        return read_edgelist(path)
    if ":" in text or text in GRAPH_FAMILIES or text in FAMILIES:
        return family_graph(text)
    raise UsageError(f"no such graph file: {text}")


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    verdict = Solver(g, _budget(args)).solve(initial_position(g))
    if args.json:
        print(verdict.to_json(g.name))
    elif verdict.outcome == "N":
        print(f"N, winning move {verdict.winning_move}")
    else:
        print("P")
    return EXIT_OK


def cmd_classify(args) -> int:
    q = parse_position(args.position)
    verdict = classify(q, _budget(args))
    line = f"{verdict.outcome} ({verdict.engine})"
    if verdict.move is not None:
        idx, j = verdict.move
        line += f", winning move: vertex {j} of {q.components[idx]}"
    print(f"{q}: {line}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.cap, _budget(args))
    print(report.table())
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n")
    return EXIT_DISAGREE if report.disagreements else EXIT_OK


def cmd_involution(args) -> int:
    g = load_graph(args.graph)
    inv = find_involution(g, args.d, args.max_vertices)
    print("none" if inv is None else str(inv))
    return EXIT_OK


def cmd_construct(args) -> int:
    g = family_graph(args.family)
    text = format_edgelist(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_play(args, stdin=None, out=None) -> int:
    stdin = stdin or sys.stdin
    out = out or sys.stdout
    g = load_graph(args.graph)
    solver = Solver(g, _budget(args))
    engine = optimal_strategy(solver)
    q = initial_position(g)
    human_turn = args.human_first
    last = None
    print(f"{g.name or 'graph'}: {g.n} vertices; vertices are numbered 0..{g.n - 1}", file=out)
    while not q.trivial:
        print(f"shaded {q.S}  white {q.W}", file=out)
        if human_turn:
            print(f"your move (one of {legal_moves(q)}): ", end="", file=out, flush=True)
            line = stdin.readline()
            if not line:
                print("\ninput closed", file=out)
                return EXIT_USAGE
            try:
                u = int(line.strip())
                q = apply_move(q, u)
            except (ValueError, IllegalMove):
                print(f"not a legal move: {line.strip()!r}", file=out)
                continue
        else:
            u = engine(q)
            q = apply_move(q, u)
            print(f"solver plays {u}", file=out)
        last = "human" if human_turn else "solver"
        human_turn = not human_turn
    print(f"shaded {q.S}  white {q.W}", file=out)
    print(f"{last} made the last move and wins", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domgame", description="Exact solver for the snooker-domination game.")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget_flag(p):
        p.add_argument("--budget", type=int, default=None, help="node budget (default: $DOMGAME_BUDGET or 50M)")

    p = sub.add_parser("solve", help="solve the game on a graph")
    p.add_argument("--graph", required=True, help="edge-list file or family:name:params")
    p.add_argument("--json", action="store_true")
    budget_flag(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="outcome of a sum of paths, e.g. 'P7^0 + P3^2'")
    p.add_argument("--position", required=True)
    budget_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check every family result against the solver")
    p.add_argument("--cap", type=int, default=25, help="largest vertex count to include")
    p.add_argument("--json", metavar="OUT", help="also write the JSON report here")
    budget_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("involution", help="search for a d-involution")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=64)
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("construct", help="write a family graph as an edge list")
    p.add_argument("--family", required=True, help="e.g. kneser:5:2")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("play", help="play against the solver")
    p.add_argument("--graph", required=True)
    p.add_argument("--human-first", action="store_true")
    budget_flag(p)
    p.set_defaults(func=cmd_play)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is not None and args.budget < 1:
        parser.error("--budget must be positive")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvolutionBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, NotationError, G.GraphError, ClaimError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
