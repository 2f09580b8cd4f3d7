import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame.game import Solver
from domgame.paths import (
    NotationError,
    NotStandard,
    PathComponent,
    PathPosition,
    children,
    classify,
    classify_standard,
    component_moves,
    counters,
    is_totally_even,
    move,
    parse_position,
    reduce_position,
    solve_path_sum,
    standard_positions,
    to_position,
    totally_even_move,
)

P = PathPosition.of


def C(k, i):
    return PathComponent(k, i)


components = st.integers(1, 9).flatmap(
    lambda k: st.integers(0, min(k, 2) if k > 1 else 1).map(lambda i: PathComponent(k, i))
)
positions = st.lists(components, max_size=4).map(lambda cs: PathPosition(tuple(cs)))
standard = st.lists(st.integers(1, 9), max_size=4).map(lambda ks: P(*ks))


def test_component_validation():
    with pytest.raises(ValueError):
        PathComponent(1, 2)
    with pytest.raises(ValueError):
        PathComponent(0, 0)
    with pytest.raises(ValueError):
        PathComponent(3, 3)
    assert C(4, 2).white == 2 and C(1, 0).white == 1 and C(1, 1).white == 0


@pytest.mark.parametrize("c, j, expected", [
    (C(7, 1), 1, P((1, 1), (5, 1))),
    (C(4, 2), 1, P((1, 1), (2, 2))),
    (C(3, 0), 0, P((2, 1))),
    (C(1, 0), 0, P()),
    (C(5, 2), 0, P((4, 2))),
])
def test_component_moves(c, j, expected):
    assert component_moves(c, j) == expected


def test_component_moves_range():
    with pytest.raises(IndexError):
        component_moves(C(3, 2), 3)


@settings(max_examples=200)
@given(components, st.data())
def test_fragments_conserve_vertices(c, data):
    j = data.draw(st.integers(0, c.k - 1))
    assert component_moves(c, j).vertices == c.k - 1


@settings(max_examples=200)
@given(standard)
def test_standardness_is_closed_under_moves(q):
    assert all(child.standard for _, _, child in children(q))


@pytest.mark.parametrize("q, expected", [
    (P(1, 4, 3), (1, 1, 2)),
    (P(6), (0, 0, 0)),
    (P(1, 1, 3, 3), (2, 0, 4)),
])
def test_counters(q, expected):
    assert counters(q) == expected


def test_counters_need_standard_input():
    with pytest.raises(NotStandard):
        counters(P((3, 0)))


@pytest.mark.parametrize("q, expected", [(P(3, 3), True), (P(4), False), (P(1, 4), False)])
def test_totally_even(q, expected):
    assert is_totally_even(q) is expected


def test_totally_even_move_examples():
    q = P(7)
    idx, j = totally_even_move(q)
    assert j == 3 and move(q, idx, j) == P(3, 3)
    q = P(1, 4, 4)
    idx, j = totally_even_move(q)
    assert q.components[idx].k == 1
    q = P(4, 3)
    idx, j = totally_even_move(q)
    assert q.components[idx].k == 4 and j in (0, 3)
    assert is_totally_even(move(q, idx, j))


def test_totally_even_move_preconditions():
    with pytest.raises(ValueError):
        totally_even_move(P(4, 2))  # even number of unchosen vertices
    with pytest.raises(ValueError):
        totally_even_move(P(1))


def test_totally_even_move_is_sound_up_to_14():
    count = 0
    for q in standard_positions(14):
        if q.trivial or (q.white + q.shaded) % 2 == 0:
            continue
        idx, j = totally_even_move(q)
        assert is_totally_even(move(q, idx, j)), q
        count += 1
    assert count > 150


def test_totally_even_positions_have_no_one_move_win():
    for q in standard_positions(14):
        if q.trivial or not is_totally_even(q):
            continue
        assert all(not child.trivial for _, _, child in children(q)), q


@pytest.mark.parametrize("q, outcome", [
    (P(6), "P"),
    (P(4), "N"),
    (P(1, 4, 3), "P"),
    (P(3, 3, 3), "N"),
    (P(3, 3), "P"),
    (P(1, 3, 3), "N"),
    (P(1, 2, 3, 3, 3), "P"),  # m odd with three P3
])
def test_classify_standard_examples(q, outcome):
    assert classify_standard(q).outcome == outcome
    assert solve_path_sum(q).outcome == outcome


def test_classify_standard_rejects():
    with pytest.raises(ValueError):
        classify_standard(P(1, 2))
    with pytest.raises(NotStandard):
        classify_standard(P((5, 0)))


def test_closed_form_moves_are_winning():
    for q in standard_positions(12):
        if q.trivial:
            continue
        v = classify_standard(q)
        if v.outcome == "N":
            assert solve_path_sum(move(q, *v.move)).outcome == "P", q


def test_path_games_from_scratch():
    wins = {n for n in range(2, 14) if solve_path_sum(P((n, 0))).outcome == "N"}
    assert wins == {2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13}


def test_p5_one_shaded_end():
    assert solve_path_sum(P((5, 1))).outcome == "P"


def test_trivial_sums_are_p():
    assert solve_path_sum(P()).outcome == "P"
    v = solve_path_sum(P(1, 2, 2))
    assert v.outcome == "P" and v.move is None


def test_pass_components_reduce_to_parity():
    assert reduce_position(P(1, 1, 2, 5)) == (C(5, 2),)
    assert reduce_position(P(1, 2, 5)) == (C(1, 1), C(5, 2))


def test_equal_components_do_not_cancel():
    assert solve_path_sum(P(1)).outcome == "P"
    assert solve_path_sum(P(1, 3, 3)).outcome == "N"


@settings(max_examples=60, deadline=None)
@given(positions, st.integers(0, 3))
def test_adding_passes_in_pairs_changes_nothing(q, pairs):
    extra = P(*([1] * (2 * pairs)))
    assert solve_path_sum(q + extra).outcome == solve_path_sum(q).outcome
    assert solve_path_sum(q + P(2)).outcome == solve_path_sum(q).outcome


def test_remark_on_ten_white_vertices():
    checked = 0
    for q in standard_positions(14):
        if q.trivial or (q.white + q.shaded) % 2 or q.white < 10:
            continue
        for _, _, a in children(q):
            for _, _, b in children(a):
                assert classify_standard(b).outcome == "P"
                checked += 1
    assert checked > 0


@settings(max_examples=60, deadline=None)
@given(positions)
def test_search_matches_graph_solver(q):
    pos, _ = to_position(q)
    assert solve_path_sum(q).outcome == ("N" if Solver(pos.graph).next_wins(pos) else "P")


def test_graph_realization_layout():
    pos, layout = to_position(P((3, 1), 1))
    assert layout == [[0], [1, 2, 3]] or layout == [[0, 1, 2], [3]]
    assert pos.W == [v for comp in layout for v in comp if len(comp) == 3][1:]


def test_classify_picks_engine():
    assert classify(P(6)).engine == "closed-form"
    assert classify(P((7, 0))).engine == "search"
    assert classify(P((7, 0))).outcome == "N"


@pytest.mark.parametrize("text, expected", [
    ("P7^0 + P3^2 + P1^1", P((7, 0), (3, 2), (1, 1))),
    ("p6", P(6)),
    ("  P1 +P4^2+ p3 ", P(1, 4, 3)),
    ("P0", P()),
])
def test_parse(text, expected):
    assert parse_position(text) == expected


def test_format_round_trip():
    q = P((7, 0), (3, 2), (1, 1))
    assert parse_position(str(q)) == q
    assert str(P()) == "0"


@pytest.mark.parametrize("text", ["P3^3", "Q3", "P3 +", "P^2", "P1^2", "P3 P4", ""])
def test_parse_errors(text):
    with pytest.raises(NotationError):
        parse_position(text)


def test_parse_error_points_at_column():
    with pytest.raises(NotationError) as exc:
        parse_position("P3 + X4")
    assert "^" in str(exc.value)


def test_random_sums_deterministic():
    rng = random.Random(3)
    for _ in range(50):
        q = PathPosition(tuple(C(k, rng.randint(0, 2)) for k in rng.choices(range(2, 7), k=3)))
        assert solve_path_sum(q) == solve_path_sum(q)
