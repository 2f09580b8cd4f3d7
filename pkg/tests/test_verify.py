import json

import pytest

from domgame.verify import (
    EXPLORATORY,
    FAMILIES,
    INSTANCE_GRID,
    OPEN,
    Claim,
    ClaimError,
    check,
    instance_claims,
    predict,
    run_suite,
)


@pytest.mark.parametrize("family, params, outcome", [
    ("path", (12,), "N"),
    ("path", (14,), "P"),
    ("cycle", (5,), "P"),
    ("cycle", (7,), "N"),
    ("odd_grid", (3, 5), "N"),
    ("hypercube", (1,), "N"),
    ("hypercube", (3,), "P"),
    ("conjecture_even_grid", (2, 4), OPEN),
])
def test_predict(family, params, outcome):
    assert predict(Claim.make(family, *params)) == outcome


@pytest.mark.parametrize("family, params", [
    ("path", (1,)),
    ("cycle", (2,)),
    ("odd_grid", (2, 3)),
    ("cycle_power", (8, 2)),
    ("cycle_product", (5, 3)),
    ("even_caterpillar", (3, 2)),
    ("dangled_stars", (3, 2)),
    ("bridged_odd", (2, 2)),
    ("abelian_group", (2,)),
    ("abelian_group", (3,)),
    ("conjecture_even_grid", (3, 3)),
    ("nope", ()),
])
def test_claims_outside_hypotheses(family, params):
    with pytest.raises(ClaimError):
        Claim.make(family, *params)


def test_every_family_has_a_plain_source():
    for name, fam in FAMILIES.items():
        assert fam.source and "Theorem" not in fam.source, name


def test_check_rows():
    row = check(Claim.make("petersen"))
    assert row.solved == "P" and row.agree is True and not row.skipped
    row = check(Claim.make("hypercube", 2))
    assert row.solved == "P" and row.agree is True
    row = check(Claim.make("conjecture_even_grid", 2, 4))
    assert row.predicted == OPEN and row.agree is None and row.solved in ("N", "P")


def test_budget_exhaustion_skips_row():
    row = check(Claim.make("odd_grid", 3, 5), budget=5)
    assert row.skipped and row.solved is None and row.agree is None


def test_grid_is_fixed_and_filtered():
    assert instance_claims() == instance_claims()
    small = instance_claims(12)
    assert all(c.graph().n <= 12 for c in small)
    assert len(instance_claims()) == len(INSTANCE_GRID)


def test_cap_12_paths_and_cycles():
    report = run_suite(12)
    rows = [r for r in report.rows if r.family in ("path", "cycle")]
    assert [r.params[0] for r in rows if r.family == "path"] == list(range(2, 13))
    assert all(r.agree for r in rows)
    assert not report.disagreements


def test_cap_16():
    report = run_suite(16)
    got = {(r.family, tuple(r.params)) for r in report.rows if r.agree}
    assert {("hypercube", (d,)) for d in range(1, 5)} <= got
    assert {("sunlet", (k,)) for k in range(3, 9)} <= got
    assert ("petersen", ()) in got
    assert not report.disagreements


def test_cap_18_torus():
    report = run_suite(18)
    row = next(r for r in report.rows if r.family == "cycle_product" and r.params == [6, 3])
    assert row.solved == "P" and row.agree
    assert not report.disagreements


def test_report_is_deterministic():
    def strip(report):
        data = report.to_dict()
        for r in data["rows"]:
            r.pop("millis")
        return data

    assert strip(run_suite(14)) == strip(run_suite(14))


def test_report_json_schema():
    data = json.loads(run_suite(10).to_json())
    assert set(data) == {"version", "cap", "rows"}
    keys = {"family", "params", "predicted", "solved", "agree", "nodes", "millis", "skipped"}
    assert all(keys <= set(r) for r in data["rows"])


def test_table_separates_exploratory():
    text = run_suite(12).table()
    head, _, tail = text.partition("exploratory")
    assert "conjecture_even_grid" not in head
    assert "conjecture_even_grid" in tail
    assert EXPLORATORY == {"conjecture_even_grid"}
