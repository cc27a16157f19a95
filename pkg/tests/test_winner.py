import pytest

from conftest import all_colorings, position_with
from oracles import chain_connects
from hexlab.errors import IncompletePosition, PatternGap
from hexlab.lattice import GeneralBoard, HexCoord, make_rhombus, make_trapezoid
from hexlab.position import Color, empty_position
from hexlab.winner import (
    Outcome,
    PositionPattern,
    connectivity_winner,
    connectivity_wins,
    embed_finite_as_infinite,
    finite_boards_scan,
    gale_tour,
    gale_tour_board,
    rhombus_at,
)


def outcome_of(wins):
    if wins == {Color.RED}:
        return Outcome.RED_WIN
    if wins == {Color.BLUE}:
        return Outcome.BLUE_WIN
    return Outcome.NO_WINNER_YET


def test_red_column_wins():
    stones = {HexCoord(1, r): Color.RED for r in range(3)}
    p = position_with(make_rhombus(3), stones)
    assert connectivity_winner(p) is Outcome.RED_WIN


def test_empty_board_no_winner():
    assert connectivity_winner(empty_position(make_rhombus(3))) is Outcome.NO_WINNER_YET


def test_all_rhombus3_colorings_one_winner():
    board = make_rhombus(3)
    for stones in all_colorings(board):
        wins = connectivity_wins(board, stones)
        assert len(wins) == 1


def test_gale_tiny_boards():
    b1 = make_rhombus(1)
    assert gale_tour_board(b1, {HexCoord(0, 0): Color.RED}).outcome is Outcome.RED_WIN
    b2 = make_rhombus(2)
    stones = {c: Color.BLUE for c in b2.cells}
    assert gale_tour_board(b2, stones).outcome is Outcome.BLUE_WIN


@pytest.mark.parametrize("board", [make_rhombus(2), make_rhombus(3),
                                   make_trapezoid(1, 3), make_trapezoid(2, 4),
                                   make_trapezoid(3, 4)])
def test_gale_agrees_with_connectivity(board):
    for stones in all_colorings(board):
        tour = gale_tour_board(board, stones)
        assert tour.outcome is outcome_of(connectivity_wins(board, stones))


def test_gale_agrees_with_independent_connectivity_oracle():
    board = make_rhombus(3)
    for stones in all_colorings(board):
        red = chain_connects(board, stones, Color.RED, board.red1, board.red2)
        tour = gale_tour_board(board, stones)
        assert (tour.outcome is Outcome.RED_WIN) == red


def test_gale_path_bound_and_no_edge_revisit():
    board = make_rhombus(4)
    ring_size = len(board.cells) + 20  # generous boundary estimate
    for stones in list(all_colorings(board))[:256]:
        tour = gale_tour_board(board, stones)
        assert len(tour.path) <= 3 * (len(board.cells) + ring_size)
        edges = list(zip(tour.path, tour.path[1:]))
        assert len(edges) == len(set(edges))


def test_gale_requires_complete_coloring():
    with pytest.raises(IncompletePosition):
        gale_tour(empty_position(make_rhombus(2)))


def test_red_stones_never_hurt_red():
    import random

    board = make_rhombus(3)
    rng = random.Random(5)
    rank = {Outcome.BLUE_WIN: 0, Outcome.NO_WINNER_YET: 1, Outcome.RED_WIN: 2}
    for _ in range(200):
        cells = board.sorted_cells()
        stones = {}
        for c in cells:
            roll = rng.random()
            if roll < 0.35:
                stones[c] = Color.RED
            elif roll < 0.6:
                stones[c] = Color.BLUE
        before = outcome_of(connectivity_wins(board, stones))
        for c in cells:
            if c not in stones:
                grown = dict(stones)
                grown[c] = Color.RED
                after = outcome_of(connectivity_wins(board, grown))
                assert rank[after] >= rank[before]


def _modified_rhombus3(overlap):
    """Rhombus_3 with arc overlaps adjusted: 'none' removes the shared
    corners, 'double' extends each arc one cell past the corner."""
    b = make_rhombus(3)
    if overlap == "none":
        return GeneralBoard(
            cells=b.cells,
            red1=(HexCoord(1, 0),),
            blue1=(HexCoord(2, 1),),
            red2=(HexCoord(1, 2),),
            blue2=(HexCoord(0, 1),),
        )
    return GeneralBoard(
        cells=b.cells,
        red1=tuple(HexCoord(q, 0) for q in range(3)) + (HexCoord(2, 1),),
        blue1=tuple(HexCoord(2, r) for r in range(3)) + (HexCoord(1, 0),),
        red2=tuple(HexCoord(q, 2) for q in range(3)),
        blue2=tuple(HexCoord(0, r) for r in range(3)),
    )


def test_arcs_without_shared_corner_allow_draws():
    board = _modified_rhombus3("none")
    assert any(not connectivity_wins(board, s) for s in all_colorings(board))


def test_arcs_with_double_overlap_allow_two_winners():
    board = _modified_rhombus3("double")
    assert any(len(connectivity_wins(board, s)) == 2 for s in all_colorings(board))


def test_scan_all_red_pattern():
    from hexlab.winner import FnPattern

    pattern = FnPattern(lambda c: Color.RED, name="allred")
    report = finite_boards_scan(pattern, (0.0, 0.0), range(1, 8))
    assert all(w is Outcome.RED_WIN for w in report.winners)
    assert report.stable_winner == (Outcome.RED_WIN, 1)


def test_scan_csv_format():
    from hexlab.winner import FnPattern

    pattern = FnPattern(lambda c: Color.BLUE, name="allblue")
    report = finite_boards_scan(pattern, (0.0, 0.0), [2, 3])
    assert report.to_csv() == "size,winner\n2,BlueWin\n3,BlueWin\n"


def test_position_pattern_gap():
    p = empty_position(make_rhombus(2))
    from hexlab.lattice import Window

    wp = empty_position(Window(-1, 1, -1, 1))
    pattern = PositionPattern(wp)
    with pytest.raises(PatternGap):
        finite_boards_scan(pattern, (0.0, 0.0), [9])


def test_rhombus_at_centering():
    board = rhombus_at((0.0, 0.0), 3)
    qs = sorted({c.q for c in board.cells})
    rs = sorted({c.r for c in board.cells})
    assert len(qs) == len(rs) == 3
    # A size-3 board tightly enclosing the origin spans rows -1..1.
    assert rs == [-1, 0, 1]


def test_embed_red_winning_rhombus3():
    stones = {HexCoord(1, r): Color.RED for r in range(3)}
    for c in make_rhombus(3).cells:
        stones.setdefault(c, Color.BLUE)
    p = position_with(make_rhombus(3), stones)
    pattern = embed_finite_as_infinite(p)
    report = finite_boards_scan(pattern, pattern.center, range(3, 13))
    assert all(w is Outcome.RED_WIN for w in report.winners)


def test_embed_empty_rhombus3_center_window():
    p = empty_position(make_rhombus(3))
    pattern = embed_finite_as_infinite(p)
    report = finite_boards_scan(pattern, pattern.center, [3])
    assert report.winners == [Outcome.NO_WINNER_YET]


def test_embed_blue_winning_rhombus2():
    stones = {
        HexCoord(0, 0): Color.BLUE,
        HexCoord(0, 1): Color.BLUE,
        HexCoord(1, 0): Color.BLUE,
        HexCoord(1, 1): Color.RED,
    }
    p = position_with(make_rhombus(2), stones)
    assert connectivity_winner(p) is Outcome.BLUE_WIN
    pattern = embed_finite_as_infinite(p)
    report = finite_boards_scan(pattern, pattern.center, range(2, 11))
    assert all(w is Outcome.BLUE_WIN for w in report.winners)
