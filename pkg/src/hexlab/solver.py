"""Exact game-value computation, win search, and locality witnesses.

A position's value for the open player counts the moves they need against
best defense: 0 when already won; mover's turn takes the minimum valued
child plus one; defender's turn takes the maximum over children, defined
only when every child has a value.  Only finite values can arise here, so
"no value" is encoded as None.
"""

from __future__ import annotations

import copy
import time
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, HexLabError, NotApplicable, Unsupported
from .lattice import GeneralBoard, HexCoord
from .position import Color, Move, Position, apply_move, hash_position
from .winner import _arc_connected


def color_has_won(board: GeneralBoard, stones: dict, color: Color) -> bool:
    arcs = board.red_arcs if color is Color.RED else board.blue_arcs
    return _arc_connected(board, stones, color, arcs[0], arcs[1])


@dataclass
class Budget:
    """Node and wall-clock limits; exhausting either raises BudgetExceeded."""

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    _nodes: int = field(default=0, init=False)
    _deadline: Optional[float] = field(default=None, init=False)

    def __post_init__(self):
        if self.max_seconds is not None:
            self._deadline = time.monotonic() + self.max_seconds

    def tick(self):
        self._nodes += 1
        if self.max_nodes is not None and self._nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget {self.max_nodes} exhausted")
        if self._deadline is not None and self._nodes % 1024 == 0:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(f"time budget {self.max_seconds}s exhausted")

    @property
    def nodes(self) -> int:
        return self._nodes


def _position_key(p: Position):
    return (frozenset(p.stones.items()), p.to_move, p.remaining)


class ValueSolver:
    """Memoized game-value recursion for one (board, open player) pair.

    The transposition table is keyed by the 64-bit position hash and every
    hit is verified against the exact position key, so hash collisions are
    detected rather than trusted.
    """

    def __init__(self, open_player: Color, budget: Optional[Budget] = None):
        self.open_player = open_player
        self.budget = budget or Budget()
        self._table: dict = {}

    def value(self, p: Position) -> Optional[int]:
        if not isinstance(p.board, GeneralBoard):
            raise Unsupported("game values need a finite GeneralBoard")
        return self._value(p)

    def _value(self, p: Position) -> Optional[int]:
        h = hash_position(p)
        key = _position_key(p)
        bucket = self._table.get(h)
        if bucket is not None:
            for k, v in bucket:
                if k == key:
                    return v
        self.budget.tick()
        if color_has_won(p.board, p.stones, self.open_player):
            result = 0
        else:
            empties = p.empty_cells()
            if not empties:
                result = None
            elif p.to_move is self.open_player:
                best = None
                for cell in empties:
                    v = self._value(apply_move(p, Move(p.to_move, cell)))
                    if v is not None and (best is None or v < best):
                        best = v
                        if best == 0:
                            break
                result = None if best is None else best + 1
            else:
                result = 0
                for cell in empties:
                    v = self._value(apply_move(p, Move(p.to_move, cell)))
                    if v is None:
                        result = None
                        break
                    result = max(result, v)
        self._table.setdefault(h, []).append((key, result))
        return result


def game_value(p: Position, open_player: Color,
               budget: Optional[Budget] = None) -> Optional[int]:
    """Exact value of the position for the open player, or None."""
    return ValueSolver(open_player, budget).value(p)


def best_move(p: Position, open_player: Color,
              budget: Optional[Budget] = None) -> HexCoord:
    """The lexicographically least value-reducing move."""
    solver = ValueSolver(open_player, budget)
    k = solver.value(p)
    if k is None or k < 1 or p.to_move is not open_player:
        raise NotApplicable("needs a valued position with the open player on turn")
    for cell in p.empty_cells():
        if solver.value(apply_move(p, Move(p.to_move, cell))) == k - 1:
            return cell
    raise NotApplicable("no value-reducing move found")  # unreachable when valued


# ---------------------------------------------------------------------------
# Full win search (no draws exist on well-formed boards, so the game is
# decided by search to terminal colorings rather than through value openness)
# ---------------------------------------------------------------------------


class WinSearch:
    """Bitboard negamax with a verified transposition table.

    On rhombus boards the diagonal-reflection color swap maps a position to
    one with the same mover-wins answer, halving the table.
    """

    def __init__(self, board: GeneralBoard, budget: Optional[Budget] = None):
        self.board = board
        self.budget = budget or Budget()
        cells = board.sorted_cells()
        self.cells = cells
        self.index = {c: i for i, c in enumerate(cells)}
        self.nbr = []
        for c in cells:
            mask = 0
            for n in self._neighbors_on_board(c):
                mask |= 1 << self.index[n]
            self.nbr.append(mask)
        self.arc_masks = {
            Color.RED: tuple(self._mask(a) for a in board.red_arcs),
            Color.BLUE: tuple(self._mask(a) for a in board.blue_arcs),
        }
        self.full = (1 << len(cells)) - 1
        qs = [c.q for c in cells]
        rs = [c.r for c in cells]
        cq = (min(qs) + max(qs)) / 2
        cr = (min(rs) + max(rs)) / 2
        centrality = lambda c: (
            abs(c.q - cq) + abs(c.r - cr) + abs(c.q + c.r - cq - cr)
        )
        self._order = sorted(range(len(cells)), key=lambda i: (centrality(cells[i]), cells[i]))
        self._table: dict = {}
        self._transpose = self._transpose_map()

    def _neighbors_on_board(self, c):
        from .lattice import NEIGHBOR_OFFSETS

        for dq, dr in NEIGHBOR_OFFSETS:
            n = HexCoord(c[0] + dq, c[1] + dr)
            if n in self.board.cells:
                yield n

    def _mask(self, arc):
        m = 0
        for c in arc:
            m |= 1 << self.index[c]
        return m

    def _transpose_map(self) -> Optional[list]:
        for c in self.cells:
            if HexCoord(c.r, c.q) not in self.index:
                return None
        # Usable only when the swap also exchanges the arc structure.
        tr = [self.index[HexCoord(c.r, c.q)] for c in self.cells]
        red_t = tuple(sorted(self._remap(m, tr) for m in self.arc_masks[Color.RED]))
        blue_s = tuple(sorted(self.arc_masks[Color.BLUE]))
        if red_t != blue_s:
            return None
        return tr

    @staticmethod
    def _remap(mask: int, tr: list) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << tr[i]
            mask >>= 1
            i += 1
        return out

    def _connected(self, mask: int, color: Color) -> bool:
        a, b = self.arc_masks[color]
        reach = mask & a
        if not reach or not (mask & b):
            return False
        while True:
            frontier = 0
            m = reach
            while m:
                low = m & -m
                frontier |= self.nbr[low.bit_length() - 1]
                m ^= low
            new = frontier & mask & ~reach
            if not new:
                return bool(reach & b)
            reach |= new
            if reach & b:
                return True

    def mover_wins(self, red: int, blue: int, mover: Color) -> bool:
        """Does the player to move win with perfect play from here?"""
        key = (red, blue, mover.value)
        if self._transpose is not None:
            tkey = (
                self._remap(blue, self._transpose),
                self._remap(red, self._transpose),
                mover.other.value,
            )
            if tkey < key:
                key = tkey
        cached = self._table.get(key)
        if cached is not None:
            return cached
        self.budget.tick()
        occupied = red | blue
        result = False
        empties = [i for i in self._order if not occupied >> i & 1]
        for i in empties:
            bit = 1 << i
            if mover is Color.RED:
                nred, nblue = red | bit, blue
                won = self._connected(nred, Color.RED)
            else:
                nred, nblue = red, blue | bit
                won = self._connected(nblue, Color.BLUE)
            if won or not self.mover_wins(nred, nblue, mover.other):
                result = True
                break
        self._table[key] = result
        return result

    def masks_of(self, stones: dict) -> tuple[int, int]:
        red = blue = 0
        for c, color in stones.items():
            bit = 1 << self.index[c]
            if color is Color.RED:
                red |= bit
            else:
                blue |= bit
        return red, blue

    def winning_move(self, red: int, blue: int, mover: Color) -> Optional[HexCoord]:
        """A move after which the mover has won or the opponent loses."""
        occupied = red | blue
        for i in self._order:
            if occupied >> i & 1:
                continue
            bit = 1 << i
            nred = red | bit if mover is Color.RED else red
            nblue = blue | bit if mover is Color.BLUE else blue
            mine = nred if mover is Color.RED else nblue
            if self._connected(mine, mover) or not self.mover_wins(nred, nblue, mover.other):
                return self.cells[i]
        return None

    def winning_openings(self, mover: Color):
        for i in self._order:
            bit = 1 << i
            if mover is Color.RED:
                if self._connected(bit, Color.RED) or not self.mover_wins(bit, 0, Color.BLUE):
                    yield self.cells[i]
            else:
                if self._connected(bit, Color.BLUE) or not self.mover_wins(0, bit, Color.RED):
                    yield self.cells[i]


def first_player_win(board: GeneralBoard, first: Color = Color.RED,
                     budget: Optional[Budget] = None):
    """(wins, opening move) for the first player, by full search."""
    search = WinSearch(board, budget)
    if search.mover_wins(0, 0, first):
        opening = min(search.winning_openings(first))
        return True, opening
    return False, None


# ---------------------------------------------------------------------------
# Locality witnesses
# ---------------------------------------------------------------------------


@dataclass
class _WonNode:
    pass


@dataclass
class _OurMoveNode:
    move: HexCoord
    after: object


@dataclass
class _TheirMoveNode:
    imagined: HexCoord
    responses: dict  # opponent cell -> (reply cell, child node)


@dataclass
class LocalityWitness:
    """Finite region D plus a playbook that wins reading only D.

    Opponent moves outside D (or passes) are handled by imagining a move
    inside the region, exactly as the locality argument plays it.
    """

    region: frozenset
    policy: object
    value: int

    @property
    def size(self) -> int:
        return len(self.region)


def locality_witness(p: Position, open_player: Color,
                     budget: Optional[Budget] = None) -> LocalityWitness:
    solver = ValueSolver(open_player, budget)
    k = solver.value(p)
    if k is None:
        raise NotApplicable("position has no value for the open player")

    def reducing_move(pos: Position, val: int) -> HexCoord:
        for cell in pos.empty_cells():
            if solver.value(apply_move(pos, Move(pos.to_move, cell))) == val - 1:
                return cell
        raise NotApplicable("no value-reducing move in a valued position")

    def branch(pos: Position, w: HexCoord):
        after_w = apply_move(pos, Move(open_player.other, w))
        vw = solver.value(after_w)
        reply = reducing_move(after_w, vw)
        sub_region, sub_node = build(
            apply_move(after_w, Move(open_player, reply)), vw - 1
        )
        return sub_region | {w, reply}, (reply, sub_node)

    def build(pos: Position, val: int):
        if val == 0:
            return frozenset(), _WonNode()
        if pos.to_move is open_player:
            mv = reducing_move(pos, val)
            region, node = build(apply_move(pos, Move(open_player, mv)), val - 1)
            return region | {mv}, _OurMoveNode(mv, node)
        # Opponent to move: imagine a move w0 and its reply; that branch's
        # region is D0, and every cell of D0 gets a branch of its own.
        w0 = pos.empty_cells()[0]
        d0, branch0 = branch(pos, w0)
        responses = {w0: branch0}
        region = d0
        for w in sorted(d0):
            if w == w0 or pos.color_at(w) is not None:
                continue
            di, br = branch(pos, w)
            responses[w] = br
            region |= di
        return region, _TheirMoveNode(w0, responses)

    region, policy = build(p, k)
    return LocalityWitness(region=frozenset(region), policy=policy, value=k)


PASS = None


class WitnessRunner:
    """Plays a witness policy against real opponent moves.

    Keeps the real position and the imagined one (real play plus imagined
    opponent stones) side by side; decisions read only the region.
    """

    def __init__(self, witness: LocalityWitness, p0: Position, open_player: Color):
        self.open_player = open_player
        self.real = p0
        self.imagined = p0
        self.node = witness.policy

    def fork(self) -> "WitnessRunner":
        return copy.copy(self)

    def pending_move(self) -> Optional[HexCoord]:
        return self.node.move if isinstance(self.node, _OurMoveNode) else None

    def play_ours(self) -> HexCoord:
        node = self.node
        mv = node.move
        self.real = apply_move(self.real, Move(self.open_player, mv))
        self.imagined = apply_move(self.imagined, Move(self.open_player, mv))
        self.node = node.after
        return mv

    def feed_theirs(self, cell) -> None:
        """Advance past an opponent move; PASS stands for any move outside
        the region (it flips the turn without a visible stone)."""
        node = self.node
        opp = self.open_player.other
        if cell is not PASS:
            self.real = apply_move(self.real, Move(opp, cell))
        else:
            from dataclasses import replace

            nxt = opp.other
            self.real = replace(
                self.real,
                to_move=nxt,
                remaining=self.real.variant.allotment(nxt),
            )
        usable = (
            cell is not PASS
            and cell in node.responses
            and self.imagined.color_at(cell) is None
        )
        w = cell if usable else node.imagined
        reply, child = node.responses[w]
        self.imagined = apply_move(self.imagined, Move(opp, w))
        self.node = _OurMoveNode(reply, child)

    def done(self) -> bool:
        return isinstance(self.node, _WonNode)


def verify_witness(p: Position, open_player: Color,
                   witness: LocalityWitness) -> bool:
    """Exhaustive adversary check: the opponent ranges over every empty
    region cell plus pass; the policy must reach a really-won position
    within region-size plies using only region moves."""
    region = witness.region
    max_plies = len(region) + 2

    def run(runner: WitnessRunner, plies: int) -> bool:
        if runner.done():
            return color_has_won(runner.real.board, runner.real.stones, open_player)
        if plies > max_plies:
            return False
        mv = runner.pending_move()
        if mv is not None:
            if mv not in region or runner.real.color_at(mv) is not None:
                return False
            nxt = runner.fork()
            try:
                nxt.play_ours()
            except HexLabError:
                return False
            return run(nxt, plies + 1)
        choices = [PASS] + [
            c for c in sorted(region) if runner.real.color_at(c) is None
        ]
        for choice in choices:
            nxt = runner.fork()
            try:
                nxt.feed_theirs(choice)
            except HexLabError:
                return False
            if not run(nxt, plies + 1):
                return False
        return True

    return run(WitnessRunner(witness, p, open_player), 0)


# ---------------------------------------------------------------------------
# Trapezoid exploration
# ---------------------------------------------------------------------------


@dataclass
class TrapezoidCell:
    a: int
    n: int
    winner: str  # "Blue", "Red", or "Unknown"
    nodes: int


def trapezoid_table(a_values, n_values, budget_nodes: int = 2_000_000):
    """Solve Blue-moves-first trapezoid games; budget misses are Unknown.

    Reports only what the search proved; the question of arbitrarily large
    trapezoids stays open.
    """
    from .lattice import make_trapezoid

    rows = []
    for a in a_values:
        for n in n_values:
            if a > n:
                continue
            board = make_trapezoid(a, n)
            budget = Budget(max_nodes=budget_nodes)
            try:
                blue_wins, _ = first_player_win(board, first=Color.BLUE, budget=budget)
                winner = "Blue" if blue_wins else "Red"
            except BudgetExceeded:
                winner = "Unknown"
            rows.append(TrapezoidCell(a=a, n=n, winner=winner, nodes=budget.nodes))
    return rows


def trapezoid_table_csv(rows) -> str:
    lines = ["a,n,winner"]
    for row in rows:
        lines.append(f"{row.a},{row.n},{row.winner}")
    return "\n".join(lines) + "\n"
