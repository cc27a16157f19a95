"""Seeded adversary scripts and playout monitors.

The scripts stand in for "any opponent behavior" at desk scale; acceptance
is invariant-based, so monitors record violations with the move index.
"""

from __future__ import annotations

import random

from .errors import WindowFull
from .lattice import HexCoord, Window, mirror_pair, neighbors
from .position import Color, Position
from .strategies import (
    CHANNEL_COLUMNS,
    BiasedBoardSpec,
    Monitor,
    MoveEvent,
    PathBend2For1,
    Strategy,
    channel_assignment,
)


class RandomScript(Strategy):
    """Plays uniformly among the allowed pool of empty cells.

    Rejection-sampled for speed; falls back to an explicit scan when the
    pool runs nearly dry.  Deterministic given the seed.
    """

    name = "random"

    def __init__(self, seed: int, pool=None):
        self.rng = random.Random(seed)
        self.pool = None if pool is None else sorted(pool)

    def next_moves(self, p: Position) -> list[HexCoord]:
        want = p.remaining
        if self.pool is None:
            self.pool = sorted(p.board.cells)
        pool = self.pool
        out: list[HexCoord] = []
        taken: set = set()
        attempts = 0
        limit = 60 * want + 240
        while len(out) < want:
            attempts += 1
            if attempts > limit:
                empties = [
                    c for c in pool if p.color_at(c) is None and c not in taken
                ]
                if len(empties) < want - len(out):
                    raise WindowFull("script pool exhausted")
                out.extend(self.rng.sample(empties, want - len(out)))
                break
            c = pool[self.rng.randrange(len(pool))]
            if c not in taken and p.color_at(c) is None:
                taken.add(c)
                out.append(c)
        return out


class CrosserScript(Strategy):
    """Adversarial red for mirroring playouts: snakes a chain from the upper
    right toward the lower left, backtracking when boxed in."""

    name = "crosser"

    def __init__(self, seed: int, pool):
        self.rng = random.Random(seed)
        self.pool = sorted(pool)
        self._pool_set = set(self.pool)
        self._trail: list[HexCoord] = []

    def next_moves(self, p: Position) -> list[HexCoord]:
        def sw_key(c):
            return ((c.q + c.r / 2.0) + c.r * 0.9, c)

        while self._trail:
            head = self._trail[-1]
            options = [
                nb for nb in neighbors(head)
                if nb in self._pool_set and p.color_at(nb) is None
            ]
            if options:
                cell = min(options, key=sw_key)
                self._trail.append(cell)
                return [cell]
            self._trail.pop()
        empties = [c for c in self.pool if p.color_at(c) is None]
        if not empties:
            raise WindowFull("crosser pool exhausted")
        start = max(empties, key=lambda c: (c.q + c.r / 2.0) + c.r)
        self._trail = [start]
        return [start]


class RowFillerScript(Strategy):
    """Scripted self-destruction: fills one row west to east, handing the
    mirroring opponent a finished row of its own."""

    name = "rowfiller"

    def __init__(self, row: int, qmin: int, qmax: int):
        self.cells = [HexCoord(q, row) for q in range(qmin, qmax + 1)]

    def next_moves(self, p: Position) -> list[HexCoord]:
        for c in self.cells:
            if p.color_at(c) is None:
                return [c]
        raise WindowFull("row already full")


class NearestOriginScript(Strategy):
    """Hammers the empty pool cell closest to the origin, every turn."""

    name = "channel_hammer"

    def __init__(self, pool):
        self.cells = sorted(pool, key=lambda c: (abs(c.r), 0 if c.r >= 0 else 1, c.q))

    def next_moves(self, p: Position) -> list[HexCoord]:
        for c in self.cells:
            if c in p.board and p.color_at(c) is None:
                return [c]
        raise WindowFull("hammer pool saturated")


def channel_hammer(window: Window) -> NearestOriginScript:
    """Attacks the two channel columns, nearest the origin first."""
    pool = [
        HexCoord(q, r)
        for q in CHANNEL_COLUMNS
        for r in range(window.rmin, window.rmax + 1)
    ]
    return NearestOriginScript(pool)


class ExtremeAttackerScript(Strategy):
    """Attacks the path-bending strategy adjacent to its target path, just
    beyond the current high-water mark."""

    name = "extreme_attacker"

    def __init__(self, strategy: PathBend2For1, seed: int = 0):
        self.strategy = strategy
        self.rng = random.Random(seed)

    def next_moves(self, p: Position) -> list[HexCoord]:
        st = self.strategy
        path_cells = set(st.path_cells())
        for side in (1, -1):
            hw = st.high_water[side]
            rows = (
                range(hw + 1, st.rmax + 1)
                if side > 0
                else range(-hw - 1, st.rmin - 1, -1)
            )
            for r in rows:
                if r not in st.path:
                    break
                pc = st.path_cell(r)
                for cell in sorted(neighbors(pc)):
                    if (
                        cell in p.board
                        and p.color_at(cell) is None
                        and cell not in path_cells
                    ):
                        return [cell]
        empties = p.empty_cells()
        if not empties:
            raise WindowFull("no attack available")
        return [empties[self.rng.randrange(len(empties))]]


# ---------------------------------------------------------------------------
# Monitors
# ---------------------------------------------------------------------------


class MirrorSymmetryMonitor(Monitor):
    """After every blue move the stone map must be mirror-symmetric with
    colors swapped.  Tracked incrementally: a move only changes the status
    of its own mirror pair."""

    def __init__(self):
        self.violations: list[str] = []
        self._bad: set = set()

    def on_move(self, e: MoveEvent) -> None:
        cell = e.cell
        partner = mirror_pair(cell)
        key = min(cell, partner)
        a = e.position.stones.get(cell)
        b = e.position.stones.get(partner)
        paired = a is not None and b is not None and a is b.other
        if paired:
            self._bad.discard(key)
        else:
            self._bad.add(key)
        if e.color is Color.BLUE and self._bad:
            sample = next(iter(self._bad))
            self.violations.append(
                f"move {e.index}: asymmetric pair at {sample}"
            )

    def finish(self, final: Position) -> list[str]:
        return self.violations


class StraddleSlopeMonitor(Monitor):
    """Red-red pairs crossing the mirror line must slope down-right: the
    straight-down pair (q,0)-(q,-1) is impossible under mirroring."""

    def __init__(self):
        self.violations: list[str] = []

    def on_move(self, e: MoveEvent) -> None:
        if e.color is not Color.RED:
            return
        q, r = e.cell
        if r == 0:
            other = HexCoord(q, -1)
        elif r == -1:
            other = HexCoord(q, 0)
        else:
            return
        if e.position.stones.get(other) is Color.RED:
            self.violations.append(
                f"move {e.index}: vertical red straddle {e.cell}/{other}"
            )

    def finish(self, final: Position) -> list[str]:
        return self.violations


class HalfPlaneTrapMonitor(Monitor):
    """No red component may touch the window boundary in quadrant I and in
    quadrant III relative to any origin on the mirror line; such a chain is
    exactly the crossing the mirroring argument forbids."""

    def __init__(self, window: Window):
        self.window = window

    def _perimeter(self, cell: HexCoord) -> bool:
        q, r = cell
        w = self.window
        return q in (w.qmin, w.qmax) or r in (w.rmin, w.rmax)

    def finish(self, final: Position) -> list[str]:
        violations = []
        reds = {c for c, col in final.stones.items() if col is Color.RED}
        seen: set = set()
        for start in reds:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                c = stack.pop()
                for nb in neighbors(c):
                    if nb in reds and nb not in seen:
                        seen.add(nb)
                        comp.add(nb)
                        stack.append(nb)
            upper = [c for c in comp if self._perimeter(c) and c.r >= 0]
            lower = [c for c in comp if self._perimeter(c) and c.r <= -1]
            if not upper or not lower:
                continue
            max_upper_x = max(c.q + c.r / 2.0 for c in upper)
            min_lower_x = min(c.q + c.r / 2.0 for c in lower)
            if max_upper_x > min_lower_x:
                violations.append(
                    f"red component joins NE boundary (x={max_upper_x:.1f}) "
                    f"to SW boundary (x={min_lower_x:.1f})"
                )
        return violations


class ChannelCrossPairMonitor(Monitor):
    """Blue must never hold two adjacent cells on opposite channel chains."""

    def __init__(self):
        self.violations: list[str] = []

    def on_move(self, e: MoveEvent) -> None:
        if e.color is not Color.BLUE or e.cell.q not in CHANNEL_COLUMNS:
            return
        for other in channel_assignment(e.cell):
            if e.position.stones.get(other) is Color.BLUE:
                self.violations.append(
                    f"move {e.index}: blue cross pair {e.cell}/{other}"
                )

    def finish(self, final: Position) -> list[str]:
        return self.violations


class ChannelSpanMonitor(Monitor):
    """The red chain on the channel must span at least min_rows rows around
    the origin by the end of the playout."""

    def __init__(self, min_rows: int):
        self.min_rows = min_rows

    def finish(self, final: Position) -> list[str]:
        reds = {
            c for c, col in final.stones.items()
            if col is Color.RED and c.q in CHANNEL_COLUMNS
        }
        if not reds:
            return ["no red stones on the channel"]
        # Component containing the channel cell nearest the origin.
        start = min(reds, key=lambda c: (abs(c.r), 0 if c.r >= 0 else 1, c.q))
        comp = {start}
        stack = [start]
        while stack:
            c = stack.pop()
            for nb in neighbors(c):
                if nb in reds and nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        lo = min(c.r for c in comp)
        hi = max(c.r for c in comp)
        span = hi - lo + 1
        if span < self.min_rows:
            return [f"red channel span {span} rows < required {self.min_rows}"]
        return []


class PathBendMonitor(Monitor):
    """Watches the path-bending strategy's bookkeeping: the target path stays
    a chain inside the allowed region, bends move strictly outward per side,
    and progress keeps pace with free moves."""

    def __init__(self, strategy: PathBend2For1):
        self.strategy = strategy
        self.violations: list[str] = []
        self._bends_seen = 0

    def on_move(self, e: MoveEvent) -> None:
        st = self.strategy
        if len(st.bend_rows) != self._bends_seen:
            self._bends_seen = len(st.bend_rows)
            self._check_path(e.index)
            self._check_bend_order(e.index)

    def _check_path(self, index: int) -> None:
        st = self.strategy
        rows = sorted(st.path)
        for r in rows:
            cell = HexCoord(st.path[r], r)
            if not st.spec.in_region(cell):
                self.violations.append(f"move {index}: path cell {cell} left the cone")
                return
        for r in rows[:-1]:
            a = HexCoord(st.path[r], r)
            b = HexCoord(st.path[r + 1], r + 1)
            if b not in neighbors(a):
                self.violations.append(
                    f"move {index}: path break between {a} and {b}"
                )
                return

    def _check_bend_order(self, index: int) -> None:
        last: dict[int, int] = {}
        for side, row in self.strategy.bend_rows:
            if side in last and row <= last[side]:
                self.violations.append(
                    f"move {index}: bend at |row|={row} not beyond previous "
                    f"{last[side]} on side {side}"
                )
                return
            last[side] = row

    def finish(self, final: Position) -> list[str]:
        st = self.strategy
        self._check_path(-1)
        free = st.offpath_count + st.extreme_count
        if st.progress_count < free:
            self.violations.append(
                f"progress {st.progress_count} < off-path+extreme {free}"
            )
        return self.violations


class ChannelNotBridgedMonitor(Monitor):
    """Blue's west wall must never connect to the east wall through the
    channel band (outside the band the walls merge around the board)."""

    def __init__(self, spec: BiasedBoardSpec):
        self.spec = spec

    def finish(self, final: Position) -> list[str]:
        L = self.spec.channel_rows
        band = {
            c for c, col in final.stones.items()
            if col is Color.BLUE and abs(c.r) <= L
        }
        west = {c for c in band if c.q < 0}
        east = {c for c in band if c.q > 1}
        if not west or not east:
            return []
        seen = set(west)
        stack = list(west)
        while stack:
            c = stack.pop()
            if c in east:
                return ["blue bridged the channel"]
            for nb in neighbors(c):
                if nb in band and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return []


class SurroundMonitor(Monitor):
    """Every blue component must end each red turn with no empty neighbor
    inside the window, and red's channel span must never shrink."""

    def __init__(self, window: Window):
        self.window = window
        self.violations: list[str] = []
        self._last_span = 0

    def on_move(self, e: MoveEvent) -> None:
        p = e.position
        if e.color is Color.RED and p.to_move is Color.BLUE:
            # Red's turn just ended: every blue stone must be sealed.
            for cell, col in p.stones.items():
                if col is not Color.BLUE:
                    continue
                for nb in neighbors(cell):
                    if nb in p.board and p.color_at(nb) is None:
                        self.violations.append(
                            f"move {e.index}: blue {cell} keeps liberty {nb}"
                        )
                        return
            span = self._channel_span(p)
            if span < self._last_span:
                self.violations.append(
                    f"move {e.index}: red channel span shrank to {span}"
                )
            self._last_span = span

    def _channel_span(self, p: Position) -> int:
        rows = [c.r for c, col in p.stones.items()
                if col is Color.RED and c.q in CHANNEL_COLUMNS]
        return (max(rows) - min(rows) + 1) if rows else 0

    def finish(self, final: Position) -> list[str]:
        return self.violations
