"""Executable strategies and the simulation harness.

Every strategy is deterministic given its construction arguments and the
observed position; randomness lives only in adversary scripts, which carry
explicit seeds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import (
    HexLabError,
    InternalInvariantBroken,
    InvalidConfiguration,
    InvalidParams,
    NotApplicable,
    StrategyFault,
    Unsupported,
    WindowFull,
)
from .lattice import (
    GeneralBoard,
    HexCoord,
    NEIGHBOR_OFFSETS,
    Window,
    mirror_pair,
    neighbors,
)
from .position import (
    Color,
    Move,
    Position,
    VariantConfig,
    apply_move,
    empty_position,
    place_stones,
    transpose_swap,
)
from .solver import WinSearch, color_has_won


class Strategy:
    """Produces a full turn of moves for one side."""

    name = "strategy"

    def next_moves(self, p: Position) -> list[HexCoord]:
        raise NotImplementedError


def _last_move_of(p: Position, color: Color) -> Optional[HexCoord]:
    for mover, cell in reversed(p.history):
        if mover is color:
            return cell
    return None


# ---------------------------------------------------------------------------
# Mirroring
# ---------------------------------------------------------------------------


class MirroringStrategy(Strategy):
    """Blue answers every red stone at its reflection-and-half-shift partner.

    After each blue move the stone map is mirror-symmetric with colors
    swapped.  If ever asked to move with nothing to copy, blue invents an
    imaginary red move and copies that.
    """

    name = "mirroring"

    def next_moves(self, p: Position) -> list[HexCoord]:
        unanswered = []
        for mover, cell in p.history:
            if mover is not Color.RED:
                continue
            partner = mirror_pair(cell)
            mirror_color = p.color_at(partner) if partner in p.board else None
            if mirror_color is Color.RED:
                raise InternalInvariantBroken(
                    f"red owns both {cell} and its mirror {partner}; "
                    "pairing was not followed from the start"
                )
            if mirror_color is None:
                unanswered.append(cell)
        if unanswered:
            target = mirror_pair(unanswered[-1])
            if target not in p.board:
                raise WindowFull(f"mirror cell {target} outside the window")
            return [target]
        # Nothing to copy: invent an imaginary red move on an empty cell
        # whose partner is also free, and copy it.
        for cell in p.empty_cells():
            partner = mirror_pair(cell)
            if partner in p.board and partner != cell and p.color_at(partner) is None:
                return [partner]
        raise WindowFull("no pairable empty cell remains")


def mirroring_strategy() -> MirroringStrategy:
    return MirroringStrategy()


# ---------------------------------------------------------------------------
# Strategy stealing
# ---------------------------------------------------------------------------


class StolenStrategy(Strategy):
    """First-player strategy built from a second-player one.

    We hand the inner strategy a pretend game: the real board reflected on
    the diagonal with colors swapped, so our stones wear the second player's
    color there, plus enough imagined first-player stones that the second
    player owes exactly one reply.  If the real opponent later occupies the
    image of an imagined cell, the imagination is simply one move ahead and
    a fresh imaginary move is invented when needed.
    """

    name = "stolen"

    def __init__(self, sigma: Strategy, imagined_picker: Optional[Callable] = None):
        self.sigma = sigma
        self.imagined: list[HexCoord] = []  # pretend-frame cells
        # Default per the stealing argument: lexicographically least empty.
        self.picker = imagined_picker or (lambda pos: pos.empty_cells()[0])

    def next_moves(self, p: Position) -> list[HexCoord]:
        if p.to_move is not p.variant.first_player:
            raise NotApplicable("stolen strategy plays the first player")
        conj = transpose_swap(p)
        # Our stones wear conj.to_move's color in the conjugate frame; the
        # real opponent's image is the pretend first player.
        sigma_color = conj.to_move
        opp_image = sigma_color.other
        extras = [
            (opp_image, cell)
            for cell in self.imagined
            if conj.color_at(cell) is None
        ]
        pretend = place_stones(conj, extras)
        firsts = sum(1 for c in pretend.stones.values() if c is opp_image)
        seconds = sum(1 for c in pretend.stones.values() if c is sigma_color)
        while firsts != seconds + 1 and pretend.empty_cells():
            fresh = self.picker(pretend)
            self.imagined.append(fresh)
            pretend = place_stones(pretend, [(opp_image, fresh)])
            firsts += 1
        if not pretend.empty_cells():
            # Endgame: the imagined stone took the last pretend cell, so the
            # real move is forced.
            return [p.empty_cells()[0]]
        pretend = _reseat(pretend, sigma_color, first=opp_image)
        reply = self.sigma.next_moves(pretend)[0]
        return [HexCoord(reply.r, reply.q)]


def _reseat(p: Position, to_move: Color, first: Color) -> Position:
    from dataclasses import replace

    variant = VariantConfig(
        red_stones=p.variant.red_stones,
        blue_stones=p.variant.blue_stones,
        first_player=first,
    )
    return replace(
        p, to_move=to_move, remaining=variant.allotment(to_move), variant=variant
    )


def strategy_steal(sigma: Strategy, imagined_picker=None) -> StolenStrategy:
    return StolenStrategy(sigma, imagined_picker)


# ---------------------------------------------------------------------------
# Bridge ladders
# ---------------------------------------------------------------------------


def bridge_ladder(k: int) -> Position:
    """Red anchors joined by k bridges; value k with Blue to move.

    Anchor i sits at (i, i); consecutive anchors share exactly the two empty
    carrier cells (i, i+1) and (i+1, i).  The red arcs are the two end
    anchors, so red wins once every bridge is closed.
    """
    if k < 0:
        raise InvalidParams("k must be >= 0")
    anchors = [HexCoord(i, i) for i in range(k + 1)]
    uppers = [HexCoord(i, i + 1) for i in range(k)]
    lowers = [HexCoord(i + 1, i) for i in range(k)]
    cells = frozenset(anchors + uppers + lowers)
    board = GeneralBoard(
        cells=cells,
        red1=(anchors[0],),
        blue1=tuple(lowers) if lowers else (anchors[0],),
        red2=(anchors[-1],),
        blue2=tuple(uppers) if uppers else (anchors[0],),
        name=f"bridge_ladder_{k}",
    )
    p = empty_position(board, VariantConfig(first_player=Color.BLUE))
    return place_stones(p, [(Color.RED, a) for a in anchors])


# ---------------------------------------------------------------------------
# Obstacle scheduler
# ---------------------------------------------------------------------------


class _SubboardGame:
    def __init__(self, board: GeneralBoard, player: Color):
        self.board = board
        self.player = player
        self.search = WinSearch(board)
        self.local = empty_position(board, VariantConfig(first_player=player))
        self.done = False

    def seed_from(self, real: Position) -> None:
        stones = [
            (color, c) for c, color in real.stones.items() if c in self.board.cells
        ]
        self.local = place_stones(self.local, stones)

    def incorporate_opponent(self, cell: Optional[HexCoord]) -> None:
        opp = self.player.other
        if self.local.to_move is not opp:
            return
        if cell is not None and cell in self.board.cells and self.local.color_at(cell) is None:
            self.local = apply_move(self.local, Move(opp, cell))
        else:
            imagined = self.local.empty_cells()[0]
            self.local = apply_move(self.local, Move(opp, imagined))

    def winning_move(self) -> HexCoord:
        red, blue = self.search.masks_of(self.local.stones)
        cell = self.search.winning_move(red, blue, self.local.to_move)
        if cell is None:
            raise InternalInvariantBroken("no winning move in a won subboard game")
        return cell

    def play(self, cell: HexCoord) -> None:
        self.local = apply_move(self.local, Move(self.player, cell))
        if color_has_won(self.board, self.local.stones, self.player):
            self.done = True


class ObstacleScheduler(Strategy):
    """Wins supplied disjoint subboards one at a time.

    Keeps one subboard active, plays its winning strategy there (inventing
    imaginary opponent moves when the opponent goes elsewhere), and on
    completing the connection moves to the next still-empty subboard.
    """

    name = "obstacle_scheduler"

    def __init__(self, subboards: Sequence[GeneralBoard], player: Color = Color.BLUE):
        seen: set = set()
        for b in subboards:
            if seen & b.cells:
                raise InvalidConfiguration("subboards overlap")
            seen |= b.cells
        self.player = player
        self.games = [_SubboardGame(b, player) for b in subboards]
        self.active: Optional[_SubboardGame] = None
        self.completed: list[GeneralBoard] = []

    def _activate(self, p: Position) -> Optional[_SubboardGame]:
        for game in self.games:
            if game.done or game is self.active:
                continue
            if all(p.color_at(c) is None for c in game.board.cells):
                game.seed_from(p)
                return game
        return None

    def next_moves(self, p: Position) -> list[HexCoord]:
        if p.to_move is not self.player:
            raise NotApplicable("not this scheduler's turn")
        opp_last = _last_move_of(p, self.player.other)
        if self.active is not None and not self.active.done:
            self.active.incorporate_opponent(
                opp_last if opp_last in self.active.board.cells else None
            )
        if self.active is None or self.active.done:
            nxt = self._activate(p)
            if nxt is not None:
                self.active = nxt
            elif self.active is not None and self.active.done:
                self.active = None
        if self.active is not None and not self.active.done:
            if self.active.local.to_move is not self.player:
                self.active.incorporate_opponent(None)
            cell = self.active.winning_move()
            self.active.play(cell)
            if self.active.done:
                self.completed.append(self.active.board)
            return [cell]
        # Everything done: any empty cell outside the completed subboards.
        claimed = set()
        for g in self.games:
            claimed |= g.board.cells
        for cell in p.empty_cells():
            if cell not in claimed:
                return [cell]
        remaining = p.empty_cells()
        if remaining:
            return [remaining[0]]
        raise WindowFull("no empty cell left")


def obstacle_scheduler(subboards, player: Color = Color.BLUE) -> ObstacleScheduler:
    return ObstacleScheduler(subboards, player)


# ---------------------------------------------------------------------------
# Three-for-one channel strategy
# ---------------------------------------------------------------------------

CHANNEL_COLUMNS = (0, 1)


def channel_assignment(cell: HexCoord) -> tuple:
    """The two cells across the channel assigned to a channel cell."""
    q, r = cell
    if q == 0:
        return (HexCoord(1, r), HexCoord(1, r - 1))
    if q == 1:
        return (HexCoord(0, r), HexCoord(0, r + 1))
    raise InvalidParams(f"{cell} is not on the channel")


def _progress_order(window: Window) -> list[HexCoord]:
    cells = [
        HexCoord(q, r)
        for q in CHANNEL_COLUMNS
        for r in range(window.rmin, window.rmax + 1)
    ]
    # Closest to the origin first; ties toward positive rows.
    cells.sort(key=lambda c: (abs(c.r), 0 if c.r >= 0 else 1, c.q))
    return cells


class Channel3For1(Strategy):
    """Red's three-stone turn on the double-column diagonal.

    A blue stone on either chain is answered on its two assigned opposite
    cells; stones left over extend the chain at the unfilled channel cell
    closest to the origin.  Blue can then never hold two adjacent cells on
    opposite chains.
    """

    name = "channel3for1"

    def __init__(self, window: Window):
        self.window = window
        self._progress = _progress_order(window)
        self.last_tags: list[str] = []

    def next_moves(self, p: Position) -> list[HexCoord]:
        want = p.remaining
        moves: list[HexCoord] = []
        tags: list[str] = []
        blue_last = _last_move_of(p, Color.BLUE)
        if blue_last is not None and blue_last.q in CHANNEL_COLUMNS:
            for cell in channel_assignment(blue_last):
                if cell in p.board and p.color_at(cell) is None and cell not in moves:
                    moves.append(cell)
                    tags.append("across")
        for cell in self._progress:
            if len(moves) >= want:
                break
            if p.color_at(cell) is None and cell not in moves:
                moves.append(cell)
                tags.append("progress")
        if len(moves) < want:
            raise WindowFull("channel window exhausted")
        self.last_tags = tags
        return moves


def channel_3for1_strategy(window: Window) -> Channel3For1:
    return Channel3For1(window)


# ---------------------------------------------------------------------------
# Two-for-one path bending on the biased board
# ---------------------------------------------------------------------------


@dataclass
class BiasedBoardSpec:
    """Fig-style biased start: narrow two-column channel of half-length
    channel_rows, opening into cones that widen by slope_num/slope_den
    columns per row; everything around the playing region starts blue.

    The board materializes the playing region plus a two-cell blue collar;
    the rest of Blue's granted territory is off-board, which plays
    identically at desk scale.
    """

    channel_rows: int = 8
    slope_num: int = 1
    slope_den: int = 2
    row_radius: int = 80

    @property
    def window(self) -> "CellSetWindow":
        return self.board()

    def cone_half_width(self, depth: int) -> int:
        return (depth * self.slope_num) // self.slope_den + 1

    def spine_column(self, r: int) -> int:
        L = self.channel_rows
        if -L <= r <= L:
            return 0
        if r > L:
            return -((r - L + 1) // 2)
        return (-L - r + 1) // 2

    def region_bounds(self, r: int) -> tuple[int, int]:
        L = self.channel_rows
        if abs(r) <= L:
            return (0, 1)
        c = self.spine_column(r)
        w = self.cone_half_width(abs(r) - L)
        return (c - w, c + 1 + w)

    def in_region(self, cell: HexCoord) -> bool:
        q, r = cell
        if abs(r) > self.row_radius:
            return False
        lo, hi = self.region_bounds(r)
        return lo <= q <= hi

    def region_cells(self) -> list[HexCoord]:
        out = []
        for r in range(-self.row_radius, self.row_radius + 1):
            lo, hi = self.region_bounds(r)
            out.extend(HexCoord(q, r) for q in range(lo, hi + 1))
        return out

    def collar_cells(self) -> list[HexCoord]:
        collar = set()
        for r in range(-self.row_radius, self.row_radius + 1):
            lo, hi = self.region_bounds(r)
            for q in (lo - 2, lo - 1, hi + 1, hi + 2):
                collar.add(HexCoord(q, r))
        for r in (self.row_radius + 1, self.row_radius + 2):
            for sign in (1, -1):
                lo, hi = self.region_bounds(sign * self.row_radius)
                for q in range(lo - 2, hi + 3):
                    collar.add(HexCoord(q, sign * r))
        return sorted(c for c in collar if not self.in_region(c))

    def board(self):
        from .lattice import CellSet

        cells = frozenset(self.region_cells()) | frozenset(self.collar_cells())
        return CellSet(cells=cells, name="biased_board")


def make_biased_position(spec: BiasedBoardSpec) -> Position:
    variant = VariantConfig(red_stones=2, blue_stones=1, first_player=Color.BLUE)
    p = empty_position(spec.board(), variant)
    grants = [(Color.BLUE, c) for c in spec.collar_cells()]
    return place_stones(p, grants)


class PathBend2For1(Strategy):
    """Red's two-stone turn: hold the target path, bending it around attacks
    at fresh extremes to bank progress moves.

    Attack handling: channel stones get the assigned pair; path-adjacent
    stones in the cones get two stones across; attacks strictly beyond the
    side's high-water mark whose bent path stays inside the cone get one
    sealing stone plus a progress stone; anything else yields two progress
    stones.
    """

    name = "pathbend2for1"

    def __init__(self, spec: BiasedBoardSpec):
        self.spec = spec
        self.rmin = -spec.row_radius
        self.rmax = spec.row_radius
        self.path: dict[int, int] = {
            r: spec.spine_column(r) for r in range(self.rmin, self.rmax + 1)
        }
        self.high_water = {1: spec.channel_rows, -1: spec.channel_rows}
        self.bend_rows: list[tuple] = []
        self.detour_cells: set = set()
        self.progress_count = 0
        self.offpath_count = 0
        self.extreme_count = 0
        self.last_tags: list[str] = []
        self.path_versions = 0
        self._fallback = sorted(
            spec.region_cells(), key=lambda c: (abs(c.r), 0 if c.r >= 0 else 1, c.q)
        )

    # -- geometry helpers --------------------------------------------------

    def path_cell(self, r: int) -> HexCoord:
        return HexCoord(self.path[r], r)

    def path_cells(self) -> list[HexCoord]:
        return [HexCoord(q, r) for r, q in self.path.items()]

    def _attacked_rows(self, cell: HexCoord) -> list[int]:
        rows = []
        for r in range(max(self.rmin, cell.r - 1), min(self.rmax, cell.r + 1) + 1):
            pc = self.path_cell(r)
            if pc == cell or pc in neighbors(cell):
                rows.append(r)
        return rows

    def _bend(self, row: int, prefer_east: Optional[bool]) -> bool:
        """Shift the tail outward of `row` one column sideways; False when
        the bent tail would leave the cone."""
        side = 1 if row > 0 else -1
        rng = (
            range(row, self.rmax + 1) if side > 0 else range(row, self.rmin - 1, -1)
        )

        def step(r):
            # Column change from the next-inner row; {0,-1} above, {0,1} below.
            return self.path[r] - self.path[r - side]

        for shift in ((1, -1) if prefer_east in (True, None) else (-1, 1)):
            # The shifted tail stays chain-adjacent only when it starts at a
            # row where the zigzag steps the matching way.
            if side > 0:
                want = -1 if shift == 1 else 0
            else:
                want = 0 if shift == 1 else 1
            start = None
            for r in rng:
                if step(r) == want:
                    start = r
                    break
            if start is None:
                continue
            tail = (
                range(start, self.rmax + 1)
                if side > 0
                else range(start, self.rmin - 1, -1)
            )
            if not all(
                self.spec.in_region(HexCoord(self.path[r] + shift, r)) for r in tail
            ):
                continue
            for r in tail:
                self.path[r] += shift
            self.bend_rows.append((side, abs(start)))
            self.path_versions += 1
            return True
        return False

    # -- turn logic ----------------------------------------------------------

    def _classify(self, p: Position, b: Optional[HexCoord]):
        if b is None:
            return ("offpath", None)
        if abs(b.r) <= self.spec.channel_rows and b.q in CHANNEL_COLUMNS:
            return ("channel", None)
        rows = self._attacked_rows(b)
        if not rows:
            return ("offpath", None)
        if b == self.path_cell(b.r):
            return ("steal", (b, rows))
        side = 1 if b.r > 0 else -1
        outer = max(rows) if side > 0 else min(rows)
        if abs(outer) > self.high_water[side]:
            return ("extreme", (b, outer, side))
        return ("across", (b, rows))

    def next_moves(self, p: Position) -> list[HexCoord]:
        want = p.remaining
        moves: list[HexCoord] = []
        tags: list[str] = []
        blue_last = _last_move_of(p, Color.BLUE)
        kind, info = self._classify(p, blue_last)

        if kind == "channel":
            for cell in channel_assignment(blue_last):
                if cell in p.board and p.color_at(cell) is None:
                    moves.append(cell)
                    tags.append("across")
            if blue_last == self.path_cell(blue_last.r):
                self.detour_cells.update(
                    c for c in channel_assignment(blue_last) if c in p.board
                )
        elif kind == "steal":
            # A stone on an unfilled path cell: restore the chain through the
            # bridge partner (the other common neighbor of the flanking path
            # cells), plus one more protective cell beside the intruder.
            b, rows = info
            self._mark_attack(rows)
            partner = self._bridge_partner(b)
            if partner is not None and p.color_at(partner) is None:
                moves.append(partner)
                tags.append("across")
                self.detour_cells.add(partner)
            for cell in self._around(p, b):
                if len(moves) >= 2:
                    break
                if cell not in moves:
                    moves.append(cell)
                    tags.append("across")
        elif kind == "across":
            b, rows = info
            self._mark_attack(rows)
            for r in rows:
                cell = self.path_cell(r)
                if p.color_at(cell) is None and cell not in moves:
                    moves.append(cell)
                    tags.append("across")
                if len(moves) == 2:
                    break
        elif kind == "extreme":
            b, outer, side = info
            east = (b.q + b.r / 2.0) < (self.path[outer] + outer / 2.0)
            bent = self._bend(outer, prefer_east=east)
            if bent:
                self.extreme_count += 1
                self.high_water[side] = abs(outer)
                seal = self._seal_cell(p, b, outer, side)
                if seal is not None:
                    moves.append(seal)
                    tags.append("bend")
            else:
                # Too close to the cone wall to bend: ordinary attack.
                self._mark_attack([outer])
                for r in self._attacked_rows(b):
                    cell = self.path_cell(r)
                    if p.color_at(cell) is None and cell not in moves:
                        moves.append(cell)
                        tags.append("across")
                    if len(moves) == 2:
                        break
        else:
            self.offpath_count += 1

        for cell in self._progress_cells(p, want - len(moves), exclude=moves):
            moves.append(cell)
            tags.append("progress")
            self.progress_count += 1
        if len(moves) < want:
            raise WindowFull("no empty path cell remains for progress")
        self.last_tags = tags
        return moves

    def _mark_attack(self, rows) -> None:
        for r in rows:
            side = 1 if r > 0 else -1
            if abs(r) > self.high_water[side]:
                self.high_water[side] = abs(r)

    def _bridge_partner(self, b: HexCoord) -> Optional[HexCoord]:
        below = self.path.get(b.r - 1)
        above = self.path.get(b.r + 1)
        if below is None or above is None:
            return None
        common = neighbors(HexCoord(below, b.r - 1)) & neighbors(HexCoord(above, b.r + 1))
        common.discard(b)
        if len(common) != 1:
            return None
        return common.pop()

    def _around(self, p: Position, b: HexCoord) -> list[HexCoord]:
        out = []
        for cell in sorted(neighbors(b)):
            if (
                cell in p.board
                and p.color_at(cell) is None
                and self.spec.in_region(cell)
            ):
                out.append(cell)
        return out

    def _seal_cell(self, p: Position, b, outer, side) -> Optional[HexCoord]:
        inner = outer - side
        for r in (inner, outer):
            cell = self.path_cell(r)
            if p.color_at(cell) is None and cell in neighbors(b):
                return cell
        around = self._around(p, b)
        return around[0] if around else None

    def _progress_cells(self, p: Position, k: int, exclude) -> list[HexCoord]:
        out: list[HexCoord] = []
        if k <= 0:
            return out
        for r in sorted(self.path, key=lambda r: (abs(r), 0 if r >= 0 else 1)):
            cell = self.path_cell(r)
            if cell in exclude or cell in out:
                continue
            if p.color_at(cell) is None:
                out.append(cell)
                if len(out) == k:
                    return out
        # Path saturated: spend the extras elsewhere near the diagonal.
        for cell in self._fallback:
            if cell in exclude or cell in out:
                continue
            if p.color_at(cell) is None:
                out.append(cell)
                if len(out) == k:
                    return out
        return out


def path_bend_2for1_strategy(spec: Optional[BiasedBoardSpec] = None) -> PathBend2For1:
    return PathBend2For1(spec or BiasedBoardSpec())


# ---------------------------------------------------------------------------
# Surrounding strategy
# ---------------------------------------------------------------------------


class SurroundingStrategy(Strategy):
    """Red with 6n+1 stones per turn: ring each fresh blue stone with its
    empty neighbors, then spend the leftovers on channel progress."""

    name = "surrounding"

    def __init__(self, window: Window, opponent_stones: int = 1):
        self.window = window
        self.n = opponent_stones
        self._progress = _progress_order(window)
        self._seen_blue = 0

    def next_moves(self, p: Position) -> list[HexCoord]:
        want = p.variant.allotment(Color.RED)
        blue_moves = [c for mover, c in p.history if mover is Color.BLUE]
        fresh = blue_moves[self._seen_blue:]
        self._seen_blue = len(blue_moves)
        moves: list[HexCoord] = []
        for b in fresh:
            for cell in sorted(neighbors(b)):
                if cell in p.board and p.color_at(cell) is None and cell not in moves:
                    moves.append(cell)
        moves = moves[:want]
        for cell in self._progress:
            if len(moves) >= want:
                break
            if p.color_at(cell) is None and cell not in moves:
                moves.append(cell)
        if len(moves) < want:
            for cell in p.empty_cells():
                if len(moves) >= want:
                    break
                if cell not in moves:
                    moves.append(cell)
        if len(moves) < want:
            raise WindowFull("window exhausted")
        return moves


def surrounding_strategy(window: Window, opponent_stones: int = 1) -> SurroundingStrategy:
    return SurroundingStrategy(window, opponent_stones)


# ---------------------------------------------------------------------------
# Simulation harness
# ---------------------------------------------------------------------------


@dataclass
class MoveEvent:
    index: int
    turn: int
    color: Color
    cell: HexCoord
    tag: Optional[str]
    position: Position


@dataclass
class SimulationResult:
    transcript: list
    final: Position
    violations: list
    status: str
    turns: int

    def transcript_json(self) -> dict:
        return {
            "moves": [
                [color.value, cell.q, cell.r] + ([tag] if tag else [])
                for (_, color, cell, tag) in self.transcript
            ],
            "status": self.status,
            "turns": self.turns,
        }


class Monitor:
    """Observes every move; reports violations as strings."""

    def on_move(self, event: MoveEvent) -> None:
        pass

    def finish(self, final: Position) -> list[str]:
        return []


def simulate(red: Strategy, blue: Strategy, p0: Position, horizon: int,
             monitors: Sequence[Monitor] = ()) -> SimulationResult:
    """Play full turns until the horizon; deterministic given the strategies
    (seeds live inside adversary scripts)."""
    p = p0
    transcript = []
    index = 0
    status = "completed"
    turn = 0
    board_size = len(p0.board.cells)
    for turn in range(1, horizon + 1):
        strat = red if p.to_move is Color.RED else blue
        mover = p.to_move
        if len(p.stones) >= board_size:
            status = "board_full"
            break
        try:
            cells = strat.next_moves(p)
        except WindowFull:
            status = "window_full"
            break
        if len(cells) != p.remaining:
            raise StrategyFault(
                strat.name, index, f"returned {len(cells)} moves, want {p.remaining}"
            )
        tags = list(getattr(strat, "last_tags", ())) or [None] * len(cells)
        if len(tags) != len(cells):
            tags = [None] * len(cells)
        for cell, tag in zip(cells, tags):
            try:
                p = apply_move(p, Move(mover, cell))
            except HexLabError as e:
                raise StrategyFault(strat.name, index, str(e)) from e
            transcript.append((index, mover, cell, tag))
            event = MoveEvent(index=index, turn=turn, color=mover, cell=cell,
                              tag=tag, position=p)
            for m in monitors:
                m.on_move(event)
            index += 1
    violations = []
    for m in monitors:
        violations.extend(m.finish(p))
    return SimulationResult(
        transcript=transcript,
        final=p,
        violations=violations,
        status=status,
        turns=turn,
    )
