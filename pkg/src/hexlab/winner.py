"""Winner detection on finite boards, plus the growing-rhombus scan.

Two independent detectors are provided: chain connectivity over same-color
adjacency, and the boundary-following tour that walks hexagon edges keeping
red on the left and blue on the right.  They must agree on every complete
coloring of a well-formed board, which the test suite checks by enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    IncompletePosition,
    InternalInvariantBroken,
    PatternGap,
    Unsupported,
)
from .lattice import (
    SQRT3,
    GeneralBoard,
    HexCoord,
    NEIGHBOR_OFFSETS,
    make_rhombus,
)
from .position import Color, Position


class Outcome(Enum):
    RED_WIN = "RedWin"
    BLUE_WIN = "BlueWin"
    NO_WINNER_YET = "NoWinnerYet"


# ---------------------------------------------------------------------------
# Connectivity winner
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _board_adjacency(board: GeneralBoard) -> dict:
    adj = {}
    for c in board.cells:
        q, r = c
        adj[c] = tuple(
            HexCoord(q + dq, r + dr)
            for dq, dr in NEIGHBOR_OFFSETS
            if HexCoord(q + dq, r + dr) in board.cells
        )
    return adj


def _arc_connected(board: GeneralBoard, stones: dict, color: Color,
                   arc_a: Sequence[HexCoord], arc_b: Sequence[HexCoord]) -> bool:
    adj = _board_adjacency(board)
    goal = {c for c in arc_b if stones.get(c) is color}
    if not goal:
        return False
    seen = set()
    stack = [c for c in arc_a if stones.get(c) is color]
    seen.update(stack)
    while stack:
        c = stack.pop()
        if c in goal:
            return True
        for n in adj[c]:
            if n not in seen and stones.get(n) is color:
                seen.add(n)
                stack.append(n)
    return False


def connectivity_wins(board: GeneralBoard, stones: dict) -> set[Color]:
    """Which colors have a chain joining their two arcs (possibly both, on
    malformed experimental boards)."""
    wins = set()
    if _arc_connected(board, stones, Color.RED, board.red1, board.red2):
        wins.add(Color.RED)
    if _arc_connected(board, stones, Color.BLUE, board.blue1, board.blue2):
        wins.add(Color.BLUE)
    return wins


def connectivity_winner(p: Position) -> Outcome:
    """RedWin iff a red component meets both red arcs; Blue symmetric."""
    if not isinstance(p.board, GeneralBoard):
        raise Unsupported("connectivity winner needs a GeneralBoard")
    wins = connectivity_wins(p.board, p.stones)
    if wins == {Color.RED}:
        return Outcome.RED_WIN
    if wins == {Color.BLUE}:
        return Outcome.BLUE_WIN
    if not wins:
        return Outcome.NO_WINNER_YET
    raise InternalInvariantBroken("both players connected on one coloring")


# ---------------------------------------------------------------------------
# Boundary-following tour
#
# Tiling vertices are encoded as integer pairs (a, b) standing for the
# Euclidean point (a/2, b*sqrt(3)/6).  The center of cell (q, r) is
# (2q+r, 3r) in these units and its six corners are offset by (+-1, +-1) and
# (0, +-2).  Vertices satisfy a == b (mod 2), b != 0 (mod 3); each touches
# exactly three cells.
# ---------------------------------------------------------------------------


def _cell_vertices(c: HexCoord) -> tuple:
    a = 2 * c[0] + c[1]
    b = 3 * c[1]
    return (
        (a + 1, b + 1),
        (a - 1, b + 1),
        (a + 1, b - 1),
        (a - 1, b - 1),
        (a, b + 2),
        (a, b - 2),
    )


def _vertex_cells(v: tuple) -> tuple:
    a, b = v
    m = b % 3
    if m == 1:
        k = (b - 1) // 3
        return (
            HexCoord((a - (k + 1)) // 2, k + 1),   # above
            HexCoord((a - 1 - k) // 2, k),          # below left
            HexCoord((a + 1 - k) // 2, k),          # below right
        )
    if m == 2:
        k = (b - 2) // 3
        return (
            HexCoord((a - k) // 2, k),              # below
            HexCoord((a - 1 - (k + 1)) // 2, k + 1),  # above left
            HexCoord((a + 1 - (k + 1)) // 2, k + 1),  # above right
        )
    raise InternalInvariantBroken(f"{v} is not a tiling vertex")


def _shared_vertices(c1: HexCoord, c2: HexCoord) -> tuple:
    s = set(_cell_vertices(c1)) & set(_cell_vertices(c2))
    if len(s) != 2:
        raise InternalInvariantBroken(f"cells {c1}, {c2} are not adjacent")
    return tuple(sorted(s))


ARM_RED1, ARM_BLUE1, ARM_RED2, ARM_BLUE2 = 0, 1, 2, 3
_RED_ARMS = (ARM_RED1, ARM_RED2)


@dataclass(frozen=True)
class GaleFrame:
    """Virtual boundary stones around a board plus the tour's start edge."""

    virtual: dict        # ring cell -> arm index
    start: tuple         # (v_prev, v_cur, left_cell, right_cell)

    def color_of_arm(self, arm: int) -> Color:
        return Color.RED if arm in _RED_ARMS else Color.BLUE


def _ring_cells(board: GeneralBoard) -> set[HexCoord]:
    ring = set()
    for c in board.cells:
        for dq, dr in NEIGHBOR_OFFSETS:
            n = HexCoord(c[0] + dq, c[1] + dr)
            if n not in board.cells:
                ring.add(n)
    return ring


def _detect_rhombus(board: GeneralBoard) -> Optional[tuple]:
    """(n, q0, r0) when the board is an axis-aligned rhombus with the
    standard row/column arcs, else None."""
    qs = [c.q for c in board.cells]
    rs = [c.r for c in board.cells]
    q0, q1, r0, r1 = min(qs), max(qs), min(rs), max(rs)
    n = q1 - q0 + 1
    if r1 - r0 + 1 != n or len(board.cells) != n * n:
        return None
    if set(board.red1) != {HexCoord(q, r0) for q in range(q0, q1 + 1)}:
        return None
    if set(board.red2) != {HexCoord(q, r1) for q in range(q0, q1 + 1)}:
        return None
    if set(board.blue1) != {HexCoord(q1, r) for r in range(r0, r1 + 1)}:
        return None
    if set(board.blue2) != {HexCoord(q0, r) for r in range(r0, r1 + 1)}:
        return None
    return (n, q0, r0)


def _rhombus_frame(n: int, q_off: int = 0, r_off: int = 0) -> GaleFrame:
    t = lambda q, r: HexCoord(q + q_off, r + r_off)
    virtual = {}
    for q in range(0, n + 1):
        virtual[t(q, -1)] = ARM_RED1
    for r in range(0, n):
        virtual[t(n, r)] = ARM_BLUE1
    for q in range(-1, n):
        virtual[t(q, n)] = ARM_RED2
    for r in range(0, n):
        virtual[t(-1, r)] = ARM_BLUE2
    left = t(n, -1)
    right = t(n, 0)
    corner = t(n - 1, 0)
    v_pair = _shared_vertices(left, right)
    inner = [v for v in v_pair if v in _cell_vertices(corner)]
    if len(inner) != 1:
        raise InternalInvariantBroken("rhombus start seam is malformed")
    v_cur = inner[0]
    v_prev = v_pair[0] if v_pair[1] == v_cur else v_pair[1]
    return GaleFrame(virtual=virtual, start=(v_prev, v_cur, left, right))


def _generic_frame(board: GeneralBoard) -> GaleFrame:
    arcs = board.arcs
    membership: dict[HexCoord, set[int]] = {}
    for i, arc in enumerate(arcs):
        for c in arc:
            membership.setdefault(c, set()).add(i)
    virtual = {}
    for x in _ring_cells(board):
        counts = [0, 0, 0, 0]
        for dq, dr in NEIGHBOR_OFFSETS:
            nb = HexCoord(x[0] + dq, x[1] + dr)
            for i in membership.get(nb, ()):
                counts[i] += 1
        if not any(counts):
            raise Unsupported(f"ring cell {x} touches no arc cell")
        best = max(counts)
        # Ties prefer red arms so the seams fall deterministically.
        for i in (ARM_RED1, ARM_RED2, ARM_BLUE1, ARM_BLUE2):
            if counts[i] == best:
                virtual[x] = i
                break
    arms = {i: [c for c, a in virtual.items() if a == i] for i in range(4)}
    if any(not arms[i] for i in range(4)):
        raise Unsupported("virtual frame degenerate: an arm is empty")
    # Start seam: adjacent red1/blue1 ring pair sharing a vertex with a board
    # cell; walk from the outer vertex through the inner one.
    candidates = []
    for x in sorted(arms[ARM_RED1]):
        for dq, dr in NEIGHBOR_OFFSETS:
            y = HexCoord(x[0] + dq, x[1] + dr)
            if virtual.get(y) == ARM_BLUE1:
                candidates.append((x, y))
    for x, y in candidates:
        v_pair = _shared_vertices(x, y)
        for v_cur in v_pair:
            third = [c for c in _vertex_cells(v_cur) if c != x and c != y]
            if len(third) == 1 and third[0] in board.cells:
                v_prev = v_pair[0] if v_pair[1] == v_cur else v_pair[1]
                return GaleFrame(virtual=virtual, start=(v_prev, v_cur, x, y))
    raise Unsupported("no usable start seam between red1 and blue1 arms")


@lru_cache(maxsize=64)
def _frame_for(board: GeneralBoard) -> GaleFrame:
    rh = _detect_rhombus(board)
    if rh is not None:
        return _rhombus_frame(*rh)
    return _generic_frame(board)


@dataclass
class TourResult:
    outcome: Outcome
    path: list          # vertices (a, b) in walk order
    terminal_arms: tuple  # (left arm, right arm) at termination


def gale_tour_board(board: GeneralBoard, stones: dict) -> TourResult:
    frame = _frame_for(board)
    virtual = frame.virtual

    def color_of(cell) -> Optional[Color]:
        s = stones.get(cell)
        if s is not None:
            return s
        arm = virtual.get(cell)
        if arm is not None:
            return frame.color_of_arm(arm)
        return None

    for c in board.cells:
        if c not in stones:
            raise IncompletePosition(f"cell {c} is empty")

    v_prev, v_cur, left, right = frame.start
    path = [v_prev, v_cur]
    limit = 3 * (len(board.cells) + len(virtual)) + 10
    for _ in range(limit):
        third = None
        for c in _vertex_cells(v_cur):
            if c != left and c != right:
                third = c
                break
        t_color = color_of(third)
        if t_color is None:
            # Exited the augmented board: read the winner off the banks.
            left_arm = virtual.get(left)
            right_arm = virtual.get(right)
            if left_arm is None or right_arm is None:
                raise InternalInvariantBroken("tour ended flanked by board cells")
            red_connected = left_arm != ARM_RED1
            blue_connected = right_arm != ARM_BLUE1
            if red_connected == blue_connected:
                raise InternalInvariantBroken(
                    f"tour terminal arms inconsistent: {left_arm}, {right_arm}"
                )
            outcome = Outcome.RED_WIN if red_connected else Outcome.BLUE_WIN
            return TourResult(outcome=outcome, path=path,
                              terminal_arms=(left_arm, right_arm))
        if t_color is Color.RED:
            left = third
        else:
            right = third
        v_pair = _shared_vertices(left, right)
        v_next = v_pair[0] if v_pair[1] == v_cur else v_pair[1]
        v_prev, v_cur = v_cur, v_next
        path.append(v_cur)
    raise InternalInvariantBroken("tour exceeded its length bound")


def gale_tour(p: Position) -> TourResult:
    """Walk hexagon edges from the start corner keeping red stones on the
    left; the terminal corner names the winner of a complete coloring."""
    if not isinstance(p.board, GeneralBoard):
        raise Unsupported("gale tour needs a GeneralBoard")
    return gale_tour_board(p.board, p.stones)


# ---------------------------------------------------------------------------
# Patterns and the growing-rhombus scan
# ---------------------------------------------------------------------------


class Pattern:
    """Total or window-total coloring of the lattice.

    color_at returns a Color or None (empty); raises PatternGap where the
    pattern is undefined.
    """

    name = "pattern"

    def color_at(self, cell: HexCoord) -> Optional[Color]:
        raise NotImplementedError


class FnPattern(Pattern):
    def __init__(self, fn: Callable[[HexCoord], Optional[Color]], name="pattern"):
        self._fn = fn
        self.name = name

    def color_at(self, cell):
        return self._fn(cell)


class PositionPattern(Pattern):
    """A window position viewed as a pattern; undefined outside the window."""

    def __init__(self, p: Position):
        self._p = p
        self.name = "position"

    def color_at(self, cell):
        if cell not in self._p.board:
            raise PatternGap(f"{cell} outside the position window")
        return self._p.stones.get(cell)


@dataclass
class ScanReport:
    center: tuple
    sizes: list
    winners: list
    stable_winner: Optional[tuple] = None  # (Outcome, threshold size)

    def to_csv(self) -> str:
        lines = ["size,winner"]
        for s, w in zip(self.sizes, self.winners):
            lines.append(f"{s},{w.value}")
        return "\n".join(lines) + "\n"


def _snap(ideal: float) -> int:
    # Round half-down with a tiny nudge so float noise on the half-integer
    # grid cannot flip the choice.
    return math.ceil(round(ideal - 0.5, 9))


def rhombus_at(center: tuple, size: int) -> GeneralBoard:
    """The size-s rhombus whose cell-center box most tightly encloses the
    point; ties break toward smaller (q, r)."""
    x, y = center
    r_c = y * 2.0 / SQRT3
    q_c = x - r_c / 2.0
    r0 = _snap(r_c - (size - 1) / 2.0)
    q0 = _snap(q_c - (size - 1) / 2.0)
    return make_rhombus(size).translate(q0, r0)


def color_board_from_pattern(board: GeneralBoard, pattern: Pattern) -> dict:
    stones = {}
    for c in board.cells:
        col = pattern.color_at(c)
        if col is not None:
            stones[c] = col
    return stones


def finite_boards_scan(pattern: Pattern, center: tuple,
                       sizes: Iterable[int]) -> ScanReport:
    """Winner of the pattern on growing rhombi centered at a point.

    Approximates the question of winning on all sufficiently large boards
    with a given center; reports the winner per size plus the stable winner
    and threshold within the scanned range, when one exists.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes) or sorted(sizes) != sizes:
        raise PatternGap("sizes must be a nonempty ascending range of positives")
    winners = []
    for s in sizes:
        board = rhombus_at(center, s)
        stones = color_board_from_pattern(board, pattern)
        wins = connectivity_wins(board, stones)
        if wins == {Color.RED}:
            winners.append(Outcome.RED_WIN)
        elif wins == {Color.BLUE}:
            winners.append(Outcome.BLUE_WIN)
        elif not wins:
            winners.append(Outcome.NO_WINNER_YET)
        else:
            raise InternalInvariantBroken("two winners on a scanned rhombus")
    stable = None
    if winners and winners[-1] is not Outcome.NO_WINNER_YET:
        w = winners[-1]
        t = len(winners) - 1
        while t > 0 and winners[t - 1] is w:
            t -= 1
        stable = (w, sizes[t])
    return ScanReport(center=center, sizes=sizes, winners=winners,
                      stable_winner=stable)


# ---------------------------------------------------------------------------
# Finite boards as patterns on the infinite lattice
# ---------------------------------------------------------------------------


class EmbeddedRhombus(Pattern):
    """A played rhombus extended to a total pattern: the slabs beyond the red
    arcs are filled red, beyond the blue arcs blue, with diagonal seams at
    the corner wedges."""

    def __init__(self, p: Position):
        board = p.board
        if not (isinstance(board, GeneralBoard) and board.name.startswith("rhombus_")):
            raise Unsupported("embedding is defined for rhombus boards")
        self._stones = dict(p.stones)
        qs = [c.q for c in board.cells]
        rs = [c.r for c in board.cells]
        self._q0, self._q1 = min(qs), max(qs)
        self._r0, self._r1 = min(rs), max(rs)
        self.name = f"embedded_{board.name}"

    @property
    def center(self) -> tuple:
        q_c = (self._q0 + self._q1) / 2.0
        r_c = (self._r0 + self._r1) / 2.0
        return (q_c + r_c / 2.0, r_c * SQRT3 / 2.0)

    def color_at(self, cell):
        q, r = cell
        if self._q0 <= q <= self._q1 and self._r0 <= r <= self._r1:
            return self._stones.get(HexCoord(q, r))
        vertical = max(self._r0 - r, r - self._r1)
        horizontal = max(self._q0 - q, q - self._q1)
        return Color.RED if vertical > horizontal else Color.BLUE


def embed_finite_as_infinite(p: Position) -> EmbeddedRhombus:
    return EmbeddedRhombus(p)
