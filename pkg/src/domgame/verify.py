"""Winner predictions for named graph families, checked against the solver.

Every family maps its integer parameters to a graph and to the outcome the
corresponding theorem predicts.  :func:`run_suite` walks a fixed instance
grid so reports are reproducible; the vertex cap only filters it.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass
from typing import Callable

from . import graphs as G
from .game import BudgetExceeded, Solver, initial_position

REPORT_VERSION = 1
OPEN = "open"


class ClaimError(ValueError):
    """Parameters fall outside the hypotheses of the family's result."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ClaimError(msg)


# -- per-family graph builders and predictions -------------------------------

def _path(n):
    _require(n >= 2, "path claim needs n >= 2")
    return G.path(n), "N" if n % 2 or n in (2, 6, 8, 10, 12) else "P"


def _cycle(n):
    _require(n >= 3, "cycle claim needs n >= 3")
    return G.cycle(n), "N" if n % 2 and n != 5 else "P"


def _hypercube(d):
    _require(d >= 1, "hypercube claim needs d >= 1")
    return G.hypercube(d), "N" if d == 1 else "P"


def _cycle_power(n, k):
    _require(n >= 6 and n % 2 == 0 and 1 <= k and 4 * k < n, "needs even n >= 6 and 1 <= k < n/4")
    return G.power(G.cycle(n), k).renamed(f"C{n}^({k})"), "P"


def _cycle_product(*ns):
    _require(len(ns) >= 1 and ns[0] >= 6 and ns[0] % 2 == 0, "first cycle must be even with length >= 6")
    rest = list(ns[1:])
    _require(all(n >= 3 for n in rest) and rest == sorted(rest), "remaining cycles must be sorted, length >= 3")
    return G.torus(*ns), "P"


def _odd_grid(k, m):
    _require(k >= 1 and m >= 1 and (k * m) % 2 == 1, "grid needs odd k*m")
    return G.grid(k, m), "N"


def _sunlet(k):
    _require(k >= 3, "sunlet needs k >= 3")
    return G.sunlet(k), "P"


def _even_caterpillar(r, spine):
    _require(r >= 3 and spine >= 4 and spine % 2 == 0, "needs r >= 3 and an even spine >= 4")
    return G.even_caterpillar(r, spine), "P"


def _dangled_stars(n, m):
    # K_n with a K_{1,m} hung by its center on every vertex
    _require(n >= 2 and m >= 1 and m % 2 == 1, "needs a base of >= 2 vertices and odd star size")
    g, _ = G.dangle(G.complete(n), list(range(n)), [(G.star(m), 0)] * n)
    return g.renamed(f"K{n}.K1,{m}"), "P"


def _bridged_odd(s, k):
    # k bridged copies of the star K_{1,s} at its center
    _require(s >= 2 and k >= 1 and k % 2 == 1, "needs star size >= 2 and an odd number of copies")
    base = G.star(s)
    g, _ = G.bridge(base, 0, [(base, 0)] * k)
    return g.renamed(f"K1,{s}--K1,{s}^{k}"), "P"


def _petersen():
    return G.petersen(), "P"


def _abelian_group(*moduli):
    _require(len(moduli) >= 1 and all(n >= 2 for n in moduli), "moduli must be >= 2")
    order = 1
    for n in moduli:
        order *= n
    _require(order % 2 == 0 and tuple(moduli) != (2,), "needs even order and not Z_2")
    good = (moduli[0] >= 6 and moduli[0] % 2 == 0) or all(n in (2, 4) for n in moduli)
    _require(good, "representation is not good")
    return G.cayley_abelian(G.GroupSpec.canonical(moduli)), "P"


def _involution_product(n, m):
    # C_n has a 3-involution for even n >= 6; for n = 4 pair its 2-involution
    # with the end-swap of P_m, which moves every vertex when m is even
    _require(m >= 1, "path factor needs m >= 1")
    ok = (n >= 6 and n % 2 == 0) or (n == 4 and m % 2 == 0)
    _require(ok, "needs even n >= 6, or n = 4 with even m")
    return G.cartesian_product(G.cycle(n), G.path(m)), "P"


def _dangled_pair(n, s):
    # two stars K_{1,s} hung by their centers on antipodal vertices of C_n
    _require(n >= 6 and n % 2 == 0 and s >= 1, "needs even n >= 6 and s >= 1")
    h = G.star(s)
    g, _ = G.dangle(G.cycle(n), [0, n // 2], [(h, 0), (h, 0)])
    return g.renamed(f"C{n}.(K1,{s})^2"), "P"


def _conjecture_even_grid(k, m):
    _require(k > 1 and m > 1 and (k * m) % 2 == 0, "needs k, m > 1 with k*m even")
    return G.grid(k, m), OPEN


@dataclass(frozen=True)
class Family:
    build: Callable
    source: str


FAMILIES: dict[str, Family] = {
    "path": Family(_path, "first player wins on P_n iff n is odd or n in {2,6,8,10,12}"),
    "cycle": Family(_cycle, "first player wins on C_n iff n is odd and n != 5"),
    "hypercube": Family(_hypercube, "second player wins on P_2^d for d >= 2 via the antipodal map"),
    "cycle_power": Family(_cycle_power, "second player wins on C_n^(k), n even >= 6, k < n/4"),
    "cycle_product": Family(_cycle_product, "second player wins on C_n1 x ... x C_nd with n1 even >= 6"),
    "odd_grid": Family(_odd_grid, "first player wins on P_k x P_m with km odd by taking the center"),
    "sunlet": Family(_sunlet, "second player wins on every sunlet S_k"),
    "even_caterpillar": Family(_even_caterpillar, "second player wins on even internally r-regular caterpillars"),
    "dangled_stars": Family(_dangled_stars, "second player wins when odd stars hang on every base vertex"),
    "bridged_odd": Family(_bridged_odd, "second player wins on an odd bridging of copies with a pendant at x"),
    "petersen": Family(_petersen, "second player wins on the Petersen graph"),
    "abelian_group": Family(_abelian_group, "second player wins on even abelian groups with canonical generators"),
    "involution_product": Family(_involution_product, "second player wins on products carrying a 3-involution"),
    "dangled_pair": Family(_dangled_pair, "second player wins when equal graphs hang at x and its 3-involution image"),
    "conjecture_even_grid": Family(_conjecture_even_grid, "open: second player conjectured to win even grids"),
}

EXPLORATORY = {"conjecture_even_grid"}


@dataclass(frozen=True)
class Claim:
    family: str
    params: tuple[int, ...]
    predicted: str
    source: str

    @classmethod
    def make(cls, family: str, *params: int) -> Claim:
        if family not in FAMILIES:
            raise ClaimError(f"unknown family {family!r}")
        fam = FAMILIES[family]
        _, predicted = fam.build(*params)
        return cls(family, tuple(params), predicted, fam.source)

    def graph(self) -> G.Graph:
        return FAMILIES[self.family].build(*self.params)[0]

    @property
    def exploratory(self) -> bool:
        return self.family in EXPLORATORY


def predict(claim: Claim) -> str:
    """The family result's verdict: ``"N"``, ``"P"`` or ``"open"``."""
    return FAMILIES[claim.family].build(*claim.params)[1]


@dataclass
class Row:
    family: str
    params: list[int]
    predicted: str
    solved: str | None
    agree: bool | None
    nodes: int
    millis: float
    skipped: bool
    vertices: int = 0


def check(claim: Claim, budget: int | None = None) -> Row:
    g = claim.graph()
    predicted = predict(claim)
    t0 = time.perf_counter()
    solver = Solver(g, budget)
    try:
        verdict = solver.solve(initial_position(g))
    except BudgetExceeded:
        return Row(claim.family, list(claim.params), predicted, None, None, solver.nodes,
                   round((time.perf_counter() - t0) * 1000, 3), True, g.n)
    agree = None if predicted == OPEN else verdict.outcome == predicted
    return Row(claim.family, list(claim.params), predicted, verdict.outcome, agree,
               verdict.nodes_expanded, round((time.perf_counter() - t0) * 1000, 3), False, g.n)


INSTANCE_GRID: list[tuple[str, tuple[int, ...]]] = (
    [("path", (n,)) for n in range(2, 17)]
    + [("cycle", (n,)) for n in range(3, 17)]
    + [("hypercube", (d,)) for d in range(1, 5)]
    + [("cycle_power", p) for p in [(6, 1), (8, 1), (10, 1), (10, 2), (12, 2), (14, 3)]]
    + [("cycle_product", p) for p in [(6, 3), (6, 4), (8, 3)]]
    + [("odd_grid", p) for p in [(3, 3), (3, 5), (3, 7), (5, 5)]]
    + [("sunlet", (k,)) for k in range(3, 9)]
    + [("even_caterpillar", p) for p in [(3, 4), (4, 4), (5, 4), (3, 6), (4, 6), (3, 8)]]
    + [("dangled_stars", p) for p in [(2, 1), (2, 3), (3, 1), (3, 3), (4, 1), (2, 5)]]
    + [("bridged_odd", p) for p in [(2, 1), (3, 1), (4, 1), (2, 3), (3, 3), (2, 5)]]
    + [("petersen", ())]
    + [("abelian_group", p) for p in [(4,), (6,), (8,), (2, 2), (2, 4), (2, 2, 2), (6, 2), (4, 4), (6, 3), (2, 2, 2, 2)]]
    + [("involution_product", p) for p in [(6, 1), (6, 2), (6, 3), (8, 2), (4, 2), (4, 4)]]
    + [("dangled_pair", p) for p in [(6, 1), (6, 2), (6, 3), (8, 1)]]
    + [("conjecture_even_grid", p) for p in [(2, 2), (2, 3), (2, 4), (3, 4), (4, 4)]]
)


def instance_claims(max_vertices: int | None = None) -> list[Claim]:
    claims = [Claim.make(fam, *params) for fam, params in INSTANCE_GRID]
    if max_vertices is None:
        return claims
    return [c for c in claims if c.graph().n <= max_vertices]


@dataclass
class Report:
    cap: int | None
    rows: list[Row]
    version: int = REPORT_VERSION

    @property
    def disagreements(self) -> list[Row]:
        return [r for r in self.rows if r.agree is False]

    def to_dict(self) -> dict:
        return {"version": self.version, "cap": self.cap, "rows": [asdict(r) for r in self.rows]}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def table(self) -> str:
        header = ("family", "params", "n", "pred", "solved", "agree", "nodes", "ms")
        theorems = [r for r in self.rows if r.family not in EXPLORATORY]
        exploratory = [r for r in self.rows if r.family in EXPLORATORY]

        def cells(r):
            agree = "skip" if r.skipped else "-" if r.agree is None else "yes" if r.agree else "NO"
            return (r.family, ",".join(map(str, r.params)) or "-", str(r.vertices), r.predicted,
                    r.solved or "-", agree, str(r.nodes), f"{r.millis:.1f}")

        body = [cells(r) for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(header, *body)]

        def fmt(cols):
            return "  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()

        lines = [f"theorems (cap={self.cap})", fmt(header)]
        lines += [fmt(cells(r)) for r in theorems]
        if exploratory:
            lines += ["", "exploratory (open problems, no pass/fail)", fmt(header)]
            lines += [fmt(cells(r)) for r in exploratory]
        skipped = sum(r.skipped for r in self.rows)
        lines += ["", f"{len(theorems)} theorem rows, {len(self.disagreements)} disagreements, {skipped} skipped"]
        return "\n".join(lines)


def run_suite(max_vertices: int | None = 16, budget: int | None = None) -> Report:
    """Check every grid instance up to ``max_vertices`` in canonical order."""
    rows = [check(c, budget) for c in instance_claims(max_vertices)]
    return Report(max_vertices, rows)
