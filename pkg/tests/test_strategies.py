import pytest

from hexlab.errors import (
    InternalInvariantBroken,
    InvalidConfiguration,
    StrategyFault,
    WindowFull,
)
from hexlab.lattice import (
    GeneralBoard,
    HexCoord,
    Window,
    make_rhombus,
    make_trapezoid,
    mirror_pair,
    mirror_window,
    neighbors,
)
from hexlab.position import Color, Move, VariantConfig, apply_move, empty_position
from hexlab.solver import color_has_won
from hexlab.scripts import (
    MirrorSymmetryMonitor,
    RandomScript,
    RowFillerScript,
    StraddleSlopeMonitor,
    SurroundMonitor,
)
from hexlab.strategies import (
    BiasedBoardSpec,
    Strategy,
    channel_3for1_strategy,
    channel_assignment,
    make_biased_position,
    mirroring_strategy,
    obstacle_scheduler,
    path_bend_2for1_strategy,
    simulate,
    strategy_steal,
    surrounding_strategy,
)
from conftest import position_with


class LexResponder(Strategy):
    name = "lex"

    def next_moves(self, p):
        return [p.empty_cells()[0]]


def test_mirroring_replies_at_partner():
    win = mirror_window(4, 6)
    p = empty_position(win)
    p = apply_move(p, Move(Color.RED, HexCoord(0, 0)))
    assert mirroring_strategy().next_moves(p) == [HexCoord(0, -1)]
    p2 = empty_position(win)
    p2 = apply_move(p2, Move(Color.RED, HexCoord(2, -3)))
    assert mirroring_strategy().next_moves(p2) == [HexCoord(0, 2)]


def test_mirroring_detects_broken_pairing():
    win = mirror_window(4, 6)
    p = position_with(
        win,
        {HexCoord(0, 0): Color.RED, HexCoord(0, -1): Color.RED},
        to_move=Color.BLUE,
    )
    from dataclasses import replace

    p = replace(p, history=((Color.RED, HexCoord(0, 0)), (Color.RED, HexCoord(0, -1))))
    with pytest.raises(InternalInvariantBroken):
        mirroring_strategy().next_moves(p)


def test_mirroring_ten_thousand_move_playout_symmetry():
    win = mirror_window(35, 82)
    pool = [c for c in win.cells if mirror_pair(c) in win]
    monitors = [MirrorSymmetryMonitor(), StraddleSlopeMonitor()]
    res = simulate(
        RandomScript(seed=123, pool=pool),
        mirroring_strategy(),
        empty_position(win),
        horizon=10_000,
        monitors=monitors,
    )
    assert res.status == "completed"
    assert res.turns == 10_000
    assert res.violations == []


def test_mirroring_can_win_not_just_draw():
    win = mirror_window(3, 5)
    res = simulate(
        RowFillerScript(row=0, qmin=-5, qmax=5),
        mirroring_strategy(),
        empty_position(win),
        horizon=24,
    )
    board = GeneralBoard(
        cells=frozenset(win.cells),
        red1=tuple(HexCoord(q, win.rmin) for q in range(win.qmin, win.qmax + 1)),
        blue1=tuple(HexCoord(win.qmax, r) for r in range(win.rmin, win.rmax + 1)),
        red2=tuple(HexCoord(q, win.rmax) for q in range(win.qmin, win.qmax + 1)),
        blue2=tuple(HexCoord(win.qmin, r) for r in range(win.rmin, win.rmax + 1)),
    )
    from hexlab.winner import connectivity_wins

    assert connectivity_wins(board, res.final.stones) == {Color.BLUE}


def test_steal_first_move_is_conjugated_reply():
    sq = Window(-4, 3, -4, 3)

    def mirror_picker(pos):
        for c in pos.empty_cells():
            m = mirror_pair(c)
            if m in pos.board and pos.color_at(m) is None and m != c:
                return c
        return pos.empty_cells()[0]

    sigma = mirroring_strategy()
    stolen = strategy_steal(sigma, imagined_picker=mirror_picker)
    first = stolen.next_moves(empty_position(sq))[0]
    # Imagined first-player move w in the pretend frame gets sigma's reply
    # mirror_pair(w); our real move is its diagonal reflection.
    w = stolen.imagined[0]
    expected = mirror_pair(w)
    assert first == HexCoord(expected.r, expected.q)


def test_steal_reinvents_when_imagined_cell_is_taken():
    board = make_rhombus(3)
    stolen = strategy_steal(LexResponder())
    p = empty_position(board)
    mv = stolen.next_moves(p)[0]
    p = apply_move(p, Move(Color.RED, mv))
    first_imagined = stolen.imagined[0]
    # Opponent really plays the image of the imagined cell.
    real_image = HexCoord(first_imagined.r, first_imagined.q)
    p = apply_move(p, Move(Color.BLUE, real_image))
    stolen.next_moves(p)
    assert len(stolen.imagined) == 2
    assert stolen.imagined[1] != first_imagined


def test_steal_never_emits_illegal_moves():
    import random

    rng = random.Random(0)
    for game in range(1000):
        stolen = strategy_steal(LexResponder())
        p = empty_position(make_rhombus(3))
        while p.empty_cells():
            if p.to_move is Color.RED:
                mv = stolen.next_moves(p)[0]
            else:
                mv = rng.choice(p.empty_cells())
            p = apply_move(p, Move(p.to_move, mv))  # raises on any illegality


def test_scheduler_rejects_overlap():
    t = make_trapezoid(1, 3)
    with pytest.raises(InvalidConfiguration):
        obstacle_scheduler([t, t.translate(1, 0)])


def test_scheduler_single_trapezoid_vs_random():
    win = Window(-2, 12, -2, 6)
    sub = make_trapezoid(1, 3).translate(3, 1)
    sched = obstacle_scheduler([sub])
    res = simulate(
        RandomScript(seed=3, pool=win.cells),
        sched,
        empty_position(win),
        horizon=40,
    )
    assert color_has_won(sub, res.final.stones, Color.BLUE)


class ActiveAttacker(Strategy):
    """Always plays inside the scheduler's active subboard."""

    name = "active_attacker"

    def __init__(self, scheduler):
        self.scheduler = scheduler

    def next_moves(self, p):
        game = self.scheduler.active
        if game is not None and not game.done:
            for c in game.board.sorted_cells():
                if p.color_at(c) is None:
                    return [c]
        return [p.empty_cells()[0]]


def test_scheduler_three_trapezoids_in_order():
    win = Window(-2, 40, -2, 8)
    subs = [
        make_trapezoid(1, 3).translate(2, 0),
        make_trapezoid(1, 3).translate(10, 0),
        make_trapezoid(2, 4).translate(18, 0),
    ]
    sched = obstacle_scheduler(subs)
    attacker = ActiveAttacker(sched)
    res = simulate(attacker, sched, empty_position(win), horizon=80)
    assert [b.name for b in sched.completed] == [b.name for b in subs]
    for sub in subs:
        assert color_has_won(sub, res.final.stones, Color.BLUE)


class FarAwayScript(Strategy):
    name = "far_away"

    def next_moves(self, p):
        for c in reversed(p.empty_cells()):
            return [c]
        raise WindowFull("no cells")


def test_scheduler_unopposed_minimal_moves():
    win = Window(-2, 30, -2, 8)
    subs = [make_trapezoid(1, 2).translate(2, 0), make_trapezoid(1, 3).translate(8, 0)]
    sched = obstacle_scheduler(subs)
    res = simulate(FarAwayScript(), sched, empty_position(win), horizon=30)
    blue_in_subs = [
        c for c, col in res.final.stones.items()
        if col is Color.BLUE and any(c in s.cells for s in subs)
    ]
    # Unopposed, each connection needs at most half the subboard's cells.
    budget = sum(len(s.cells) // 2 + 1 for s in subs)
    assert len(blue_in_subs) <= budget
    for sub in subs:
        assert color_has_won(sub, res.final.stones, Color.BLUE)


def test_channel_assignment_map():
    assert channel_assignment(HexCoord(0, 5)) == (HexCoord(1, 5), HexCoord(1, 4))
    assert channel_assignment(HexCoord(1, 5)) == (HexCoord(0, 5), HexCoord(0, 6))


def test_channel_reply_and_progress():
    win = Window(-5, 6, -20, 20)
    variant = VariantConfig(red_stones=3, blue_stones=1, first_player=Color.BLUE)
    p = empty_position(win, variant)
    p = apply_move(p, Move(Color.BLUE, HexCoord(0, 5)))
    strat = channel_3for1_strategy(win)
    moves = strat.next_moves(p)
    assert moves[:2] == [HexCoord(1, 5), HexCoord(1, 4)]
    assert strat.last_tags[:2] == ["across", "across"]
    assert strat.last_tags[2] == "progress"


def test_channel_far_blue_gives_three_progress():
    win = Window(-5, 6, -20, 20)
    variant = VariantConfig(red_stones=3, blue_stones=1, first_player=Color.BLUE)
    p = empty_position(win, variant)
    p = apply_move(p, Move(Color.BLUE, HexCoord(-4, 9)))
    strat = channel_3for1_strategy(win)
    moves = strat.next_moves(p)
    assert strat.last_tags == ["progress"] * 3
    assert moves[0] == HexCoord(0, 0)


def test_channel_window_full():
    win = Window(0, 1, 0, 0)  # two channel cells only
    variant = VariantConfig(red_stones=3, blue_stones=1, first_player=Color.RED)
    p = empty_position(win, variant)
    with pytest.raises(WindowFull):
        channel_3for1_strategy(win).next_moves(p)


def test_pathbend_classifications():
    spec = BiasedBoardSpec(channel_rows=4, row_radius=30)
    p0 = make_biased_position(spec)

    # Blue in the channel: two across.
    strat = path_bend_2for1_strategy(spec)
    p = apply_move(p0, Move(Color.BLUE, HexCoord(1, 2)))
    moves = strat.next_moves(p)
    assert set(moves) == set(channel_assignment(HexCoord(1, 2)))
    assert strat.last_tags == ["across", "across"]

    # Blue far from the path: two progress stones.
    strat = path_bend_2for1_strategy(spec)
    far = next(
        c for c in spec.region_cells()
        if c.r == 20 and all(c != pc and c not in neighbors(pc)
                             for pc in [strat.path_cell(r) for r in (19, 20, 21)])
    )
    p = apply_move(p0, Move(Color.BLUE, far))
    strat2 = path_bend_2for1_strategy(spec)
    moves = strat2.next_moves(p)
    assert strat2.last_tags == ["progress", "progress"]
    assert strat2.offpath_count == 1

    # Extreme attack: bend plus progress, counter advances.
    strat3 = path_bend_2for1_strategy(spec)
    row = spec.channel_rows + 3
    target = strat3.path_cell(row)
    attack = next(
        c for c in sorted(neighbors(target))
        if spec.in_region(c) and c not in strat3.path_cells()
    )
    p = apply_move(p0, Move(Color.BLUE, attack))
    moves = strat3.next_moves(p)
    assert strat3.extreme_count == 1
    assert "bend" in strat3.last_tags and "progress" in strat3.last_tags
    assert strat3.high_water[1] == row


def test_simulate_deterministic_transcripts():
    win = mirror_window(10, 20)
    pool = [c for c in win.cells if mirror_pair(c) in win]

    def run():
        return simulate(
            RandomScript(seed=77, pool=pool),
            mirroring_strategy(),
            empty_position(win),
            horizon=60,
        )

    a, b = run(), run()
    assert a.transcript == b.transcript
    assert a.transcript_json() == b.transcript_json()


class FaultyStrategy(Strategy):
    name = "faulty"

    def next_moves(self, p):
        return [next(iter(p.stones))] if p.stones else [p.empty_cells()[0]]


def test_simulate_reports_strategy_fault():
    win = Window(0, 3, 0, 3)
    with pytest.raises(StrategyFault) as err:
        simulate(
            FaultyStrategy(),
            LexResponder(),
            empty_position(win),
            horizon=10,
        )
    assert err.value.strategy_name == "faulty"
    # Moves 0 and 1 were legal; the third emitted stone is the repeat.
    assert err.value.move_index == 2


def test_surrounding_rings_fresh_stone():
    win = Window(-8, 8, -12, 12)
    variant = VariantConfig(red_stones=7, blue_stones=1, first_player=Color.BLUE)
    p = empty_position(win, variant)
    p = apply_move(p, Move(Color.BLUE, HexCoord(5, 5)))
    strat = surrounding_strategy(win)
    moves = strat.next_moves(p)
    assert set(moves[:6]) == {c for c in neighbors(HexCoord(5, 5))}
    assert len(moves) == 7


def test_surrounding_reuses_existing_red():
    win = Window(-8, 8, -12, 12)
    variant = VariantConfig(red_stones=7, blue_stones=1, first_player=Color.BLUE)
    p = position_with(win, {HexCoord(6, 5): Color.RED}, to_move=Color.BLUE,
                      variant=variant)
    p = apply_move(p, Move(Color.BLUE, HexCoord(5, 5)))
    strat = surrounding_strategy(win)
    moves = strat.next_moves(p)
    ring = {c for c in neighbors(HexCoord(5, 5))} - {HexCoord(6, 5)}
    assert ring <= set(moves)
    assert len(moves) == 7


def test_surrounding_playout_monitor():
    win = Window(-14, 14, -20, 20)
    variant = VariantConfig(red_stones=7, blue_stones=1, first_player=Color.RED)
    res = simulate(
        surrounding_strategy(win),
        RandomScript(seed=21, pool=win.cells),
        empty_position(win, variant),
        horizon=200,
        monitors=[SurroundMonitor(win)],
    )
    assert res.violations == []
    assert res.status in ("completed", "board_full", "window_full")
