import math
import random

import pytest

from conftest import position_with
from oracles import brute_mover_wins, brute_value
from hexlab.errors import BudgetExceeded, NotApplicable
from hexlab.lattice import HexCoord, make_rhombus, make_trapezoid
from hexlab.position import Color, Move, VariantConfig, apply_move, empty_position
from hexlab.solver import (
    Budget,
    ValueSolver,
    best_move,
    first_player_win,
    game_value,
    locality_witness,
    trapezoid_table,
    trapezoid_table_csv,
    verify_witness,
)
from hexlab.strategies import bridge_ladder


def test_value_zero_when_already_connected():
    stones = {HexCoord(1, r): Color.RED for r in range(3)}
    p = position_with(make_rhombus(3), stones, to_move=Color.BLUE)
    assert game_value(p, Color.RED) == 0


def test_value_one_move_win():
    p = empty_position(make_rhombus(1))
    assert game_value(p, Color.RED) == 1


@pytest.mark.parametrize("k", range(6))
def test_bridge_ladder_values_both_solvers(k):
    p = bridge_ladder(k)
    assert game_value(p, Color.RED) == k
    assert brute_value(p, Color.RED) == k


def test_bridge_ladder_is_made_of_bridges():
    p = bridge_ladder(3)
    reds = sorted(c for c, col in p.stones.items() if col is Color.RED)
    for a, b in zip(reds, reds[1:]):
        common = [
            c
            for c in p.board.cells
            if p.color_at(c) is None
            and c in __import__("hexlab.lattice", fromlist=["neighbors"]).neighbors(a)
            and c in __import__("hexlab.lattice", fromlist=["neighbors"]).neighbors(b)
        ]
        assert len(common) == 2


def test_best_move_answers_bridge_intrusion():
    p = bridge_ladder(1)
    intruded = apply_move(p, Move(Color.BLUE, HexCoord(0, 1)))
    assert game_value(intruded, Color.RED) == 1
    assert best_move(intruded, Color.RED) == HexCoord(1, 0)
    # Exhaustive: no other reply keeps the win in one move.
    for cell in intruded.empty_cells():
        child = apply_move(intruded, Move(Color.RED, cell))
        expected = 0 if cell == HexCoord(1, 0) else None
        assert game_value(child, Color.RED) == expected


def test_best_move_breaks_ties_lexicographically():
    stones = {HexCoord(0, 0): Color.RED, HexCoord(1, 1): Color.RED}
    p = position_with(make_rhombus(2), stones, to_move=Color.RED)
    assert game_value(p, Color.RED) == 1
    # Both carriers win; the lexicographically smaller one is returned.
    assert best_move(p, Color.RED) == HexCoord(0, 1)


def test_best_move_single_cell():
    p = empty_position(make_rhombus(1))
    assert best_move(p, Color.RED) == HexCoord(0, 0)


def test_best_move_not_applicable():
    p = empty_position(make_rhombus(1))
    with pytest.raises(NotApplicable):
        best_move(p, Color.BLUE)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_first_player_win_matches_brute(n):
    board = make_rhombus(n)
    win, opening = first_player_win(board)
    assert win is True
    assert opening in board.cells
    assert brute_mover_wins(empty_position(board)) is True


def test_recursion_sanity_rhombus2():
    board = make_rhombus(2)
    solver = ValueSolver(Color.RED)

    def explore(p):
        v = solver.value(p)
        empties = p.empty_cells()
        if v is not None and v >= 1 and empties:
            child_vals = [
                solver.value(apply_move(p, Move(p.to_move, c))) for c in empties
            ]
            if p.to_move is Color.RED:
                valued = [x for x in child_vals if x is not None]
                assert min(valued) == v - 1
            else:
                assert all(x is not None for x in child_vals)
                assert max(child_vals) == v
        for c in empties:
            explore(apply_move(p, Move(p.to_move, c)))

    explore(empty_position(board))


def test_memoized_matches_brute_on_rhombus3_to_four_plies():
    board = make_rhombus(3)
    solver = ValueSolver(Color.RED)
    seen = set()

    def explore(p, plies):
        key = (frozenset(p.stones.items()), p.to_move)
        if key in seen:
            return
        seen.add(key)
        assert solver.value(p) == brute_value(p, Color.RED, max_budget=6)
        if plies == 0:
            return
        for c in p.empty_cells():
            explore(apply_move(p, Move(p.to_move, c)), plies - 1)

    explore(empty_position(board), 4)
    assert len(seen) > 1000


def test_red_stones_never_increase_value():
    board = make_rhombus(3)
    solver = ValueSolver(Color.RED)
    rng = random.Random(9)
    for _ in range(40):
        p = empty_position(board)
        for _ in range(rng.randrange(5)):
            p = apply_move(p, Move(p.to_move, rng.choice(p.empty_cells())))
        v = solver.value(p)
        if v is None:
            continue
        for cell in p.empty_cells():
            from conftest import position_with as pw

            stones = dict(p.stones)
            stones[cell] = Color.RED
            grown = pw(board, stones, to_move=p.to_move)
            gv = solver.value(grown)
            assert gv is not None and gv <= v


def test_budget_exceeded_is_distinct():
    p = empty_position(make_rhombus(3))
    with pytest.raises(BudgetExceeded):
        game_value(p, Color.RED, Budget(max_nodes=5))


def test_witness_value_zero_empty_region():
    stones = {HexCoord(1, r): Color.RED for r in range(3)}
    p = position_with(make_rhombus(3), stones, to_move=Color.BLUE)
    w = locality_witness(p, Color.RED)
    assert w.region == frozenset()
    assert verify_witness(p, Color.RED, w)


@pytest.mark.parametrize("k", [1, 2])
def test_witness_bridge_ladders(k):
    p = bridge_ladder(k)
    w = locality_witness(p, Color.RED)
    assert w.value == k
    carriers = {c for c in p.board.cells if p.color_at(c) is None}
    assert w.region <= carriers
    if k == 1:
        assert w.region == carriers
    assert w.value <= math.ceil(len(w.region) / 2)
    assert verify_witness(p, Color.RED, w)


def test_witness_not_applicable_without_value():
    # Red already connected, so Blue has no value from here.
    stones = {HexCoord(1, r): Color.RED for r in range(3)}
    p = position_with(make_rhombus(3), stones, to_move=Color.BLUE)
    assert game_value(p, Color.BLUE) is None
    with pytest.raises(NotApplicable):
        locality_witness(p, Color.BLUE)


def test_trapezoid_table_cross_checked():
    rows = trapezoid_table([1, 2], range(1, 5))
    by_key = {(r.a, r.n): r.winner for r in rows}
    # Hand-enumerable 3-cell triangle: (0,1) sits on both blue arcs.
    assert by_key[(1, 2)] == "Blue"
    for row in rows:
        board = make_trapezoid(row.a, row.n)
        blue_first = empty_position(board, VariantConfig(first_player=Color.BLUE))
        expected = "Blue" if brute_mover_wins(blue_first) else "Red"
        assert row.winner == expected


def test_trapezoid_table_budget_yields_unknown():
    rows = trapezoid_table([1], [5], budget_nodes=10)
    assert rows[0].winner == "Unknown"


def test_trapezoid_table_csv():
    rows = trapezoid_table([1], [1, 2])
    text = trapezoid_table_csv(rows)
    assert text.splitlines()[0] == "a,n,winner"
    assert len(text.splitlines()) == 3
