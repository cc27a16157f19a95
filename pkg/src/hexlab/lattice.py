"""Hexagonal lattice geometry: coordinates, adjacency, boards, mirror pairing.

Cells are axial coordinates (q, r).  The Euclidean center of a cell is
(q + r/2, r*sqrt(3)/2), so increasing r moves up and to the right and all six
neighbors sit at distance 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .errors import InvalidParams

SQRT3 = math.sqrt(3.0)

# Axis classification tolerance for quadrant tests; cell centers live on a
# half-integer grid so anything below 1e-9 is safely "on the axis".
_AXIS_EPS = 1e-9


class HexCoord(NamedTuple):
    q: int
    r: int


NEIGHBOR_OFFSETS = (
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, -1),
    (-1, 1),
)


def neighbors(c: HexCoord) -> set[HexCoord]:
    """The six cells adjacent to c."""
    q, r = c
    return {HexCoord(q + dq, r + dr) for dq, dr in NEIGHBOR_OFFSETS}


def center(c: HexCoord) -> tuple[float, float]:
    """Euclidean center of a cell."""
    q, r = c
    return (q + r / 2.0, r * SQRT3 / 2.0)


def hex_distance(a: HexCoord, b: HexCoord) -> int:
    """Graph distance on the lattice."""
    dq = a[0] - b[0]
    dr = a[1] - b[1]
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


class Quadrant(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    AXIS = "Axis"


def quadrant_of(c: HexCoord, origin: tuple[float, float] = (0.0, 0.0)) -> Quadrant:
    """Classify a cell by the position of its center relative to an origin point.

    Cells whose center lies on either axis belong to no quadrant.
    """
    x, y = center(c)
    dx = x - origin[0]
    dy = y - origin[1]
    if abs(dx) <= _AXIS_EPS or abs(dy) <= _AXIS_EPS:
        return Quadrant.AXIS
    if dx > 0:
        return Quadrant.I if dy > 0 else Quadrant.IV
    return Quadrant.II if dy > 0 else Quadrant.III


def mirror_pair(c: HexCoord) -> HexCoord:
    """Reflection-and-half-shift partner across the line y = -sqrt(3)/4.

    The image center is the reflection of the source center across the line,
    shifted half a tile to the right when going from below to above (and half
    a tile left the other way).  Closed form: (q+r, -1-r) for r >= 0 and
    (q+r+1, -1-r) for r <= -1.  A fixed-point-free involution exchanging the
    half-planes r >= 0 and r <= -1.
    """
    q, r = c
    if r >= 0:
        return HexCoord(q + r, -1 - r)
    return HexCoord(q + r + 1, -1 - r)


@dataclass(frozen=True)
class GeneralBoard:
    """Finite connected cell set with four boundary arcs (red, blue, red, blue).

    Arcs are given in cyclic order red1, blue1, red2, blue2; on well-formed
    boards consecutive arcs share exactly one corner cell.  Red wins with a
    chain meeting both red arcs, Blue with a chain meeting both blue arcs.
    """

    cells: frozenset[HexCoord]
    red1: tuple[HexCoord, ...]
    blue1: tuple[HexCoord, ...]
    red2: tuple[HexCoord, ...]
    blue2: tuple[HexCoord, ...]
    name: str = field(default="general", compare=False)

    def __post_init__(self):
        for arc in (self.red1, self.blue1, self.red2, self.blue2):
            if not arc:
                raise InvalidParams("boundary arcs must be nonempty")
            for cell in arc:
                if cell not in self.cells:
                    raise InvalidParams(f"arc cell {cell} not on board")
        if not _connected(self.cells):
            raise InvalidParams("board cells must form one connected component")

    @property
    def red_arcs(self) -> tuple[tuple[HexCoord, ...], tuple[HexCoord, ...]]:
        return (self.red1, self.red2)

    @property
    def blue_arcs(self) -> tuple[tuple[HexCoord, ...], tuple[HexCoord, ...]]:
        return (self.blue1, self.blue2)

    @property
    def arcs(self):
        return (self.red1, self.blue1, self.red2, self.blue2)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[HexCoord]:
        return sorted(self.cells)

    def translate(self, dq: int, dr: int) -> "GeneralBoard":
        t = lambda c: HexCoord(c[0] + dq, c[1] + dr)
        return GeneralBoard(
            cells=frozenset(t(c) for c in self.cells),
            red1=tuple(t(c) for c in self.red1),
            blue1=tuple(t(c) for c in self.blue1),
            red2=tuple(t(c) for c in self.red2),
            blue2=tuple(t(c) for c in self.blue2),
            name=f"{self.name}@{dq},{dr}" if dq or dr else self.name,
        )


@dataclass(frozen=True)
class Window:
    """Finite rectangle of the infinite lattice; no boundary arcs."""

    qmin: int
    qmax: int
    rmin: int
    rmax: int

    def __post_init__(self):
        if self.qmin > self.qmax or self.rmin > self.rmax:
            raise InvalidParams("empty window")

    def __contains__(self, cell) -> bool:
        q, r = cell
        return self.qmin <= q <= self.qmax and self.rmin <= r <= self.rmax

    def __len__(self) -> int:
        return (self.qmax - self.qmin + 1) * (self.rmax - self.rmin + 1)

    @property
    def cells(self) -> frozenset[HexCoord]:
        return frozenset(
            HexCoord(q, r)
            for q in range(self.qmin, self.qmax + 1)
            for r in range(self.rmin, self.rmax + 1)
        )

    def sorted_cells(self) -> list[HexCoord]:
        return sorted(self.cells)


def mirror_window(rows_above: int, half_width: int) -> Window:
    """Window symmetric under mirror_pair: rows -rows_above-1 .. rows_above."""
    return Window(-half_width, half_width, -rows_above - 1, rows_above)


@dataclass(frozen=True)
class CellSet:
    """Arbitrary finite cell set treated as an arcless board."""

    cells: frozenset[HexCoord]
    name: str = field(default="cellset", compare=False)

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[HexCoord]:
        return sorted(self.cells)


def _connected(cells: frozenset[HexCoord]) -> bool:
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        q, r = stack.pop()
        for dq, dr in NEIGHBOR_OFFSETS:
            n = HexCoord(q + dq, r + dr)
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


def make_rhombus(n: int) -> GeneralBoard:
    """The standard n-by-n board.

    Red arcs are the rows r=0 and r=n-1, blue arcs the columns q=0 and q=n-1;
    adjacent arcs share one corner cell.
    """
    if n < 1:
        raise InvalidParams(f"rhombus size must be >= 1, got {n}")
    cells = frozenset(HexCoord(q, r) for q in range(n) for r in range(n))
    return GeneralBoard(
        cells=cells,
        red1=tuple(HexCoord(q, 0) for q in range(n)),
        blue1=tuple(HexCoord(n - 1, r) for r in range(n)),
        red2=tuple(HexCoord(q, n - 1) for q in range(n)),
        blue2=tuple(HexCoord(0, r) for r in range(n)),
        name=f"rhombus_{n}",
    )


def make_trapezoid(a: int, n: int) -> GeneralBoard:
    """Truncated right triangle: rows of widths n, n-1, ..., a.

    Red connects the parallel sides (bottom row, length n, and the truncation
    cut, length a); Blue connects the two slanted sides.
    """
    if a < 1 or n < 1 or a > n:
        raise InvalidParams(f"need 1 <= a <= n, got a={a} n={n}")
    top = n - a
    cells = frozenset(
        HexCoord(q, r) for r in range(top + 1) for q in range(n - r)
    )
    return GeneralBoard(
        cells=cells,
        red1=tuple(HexCoord(q, 0) for q in range(n)),
        blue1=tuple(HexCoord(n - 1 - r, r) for r in range(top + 1)),
        red2=tuple(HexCoord(q, top) for q in range(a)),
        blue2=tuple(HexCoord(0, r) for r in range(top + 1)),
        name=f"trapezoid_{a}_{n}",
    )


def boundary_cells(board: GeneralBoard) -> set[HexCoord]:
    """Cells with at least one off-board neighbor."""
    return {c for c in board.cells if any(n not in board.cells for n in neighbors(c))}


def arc_issues(board: GeneralBoard) -> list[str]:
    """Validation findings for the four-arc structure.

    On a well-formed board each corner cell belongs to exactly two arcs,
    consecutive arcs share exactly one corner, arc interiors are disjoint, and
    the arcs jointly cover the boundary.  Degenerate boards (such as the
    single-cell rhombus) are reported rather than rejected.
    """
    issues = []
    arcs = board.arcs
    arc_sets = [set(a) for a in arcs]
    for i in range(4):
        shared = arc_sets[i] & arc_sets[(i + 1) % 4]
        if len(shared) != 1:
            issues.append(
                f"arcs {i} and {(i + 1) % 4} share {len(shared)} cells, want 1"
            )
    membership: dict[HexCoord, int] = {}
    for s in arc_sets:
        for c in s:
            membership[c] = membership.get(c, 0) + 1
    corners = {c for c, k in membership.items() if k > 1}
    for c in corners:
        if membership[c] != 2:
            issues.append(f"corner {c} belongs to {membership[c]} arcs, want 2")
    interiors = [s - corners for s in arc_sets]
    for i in range(4):
        for j in range(i + 1, 4):
            if interiors[i] & interiors[j]:
                issues.append(f"arc interiors {i} and {j} overlap")
    uncovered = boundary_cells(board) - set().union(*arc_sets)
    if uncovered:
        issues.append(f"boundary cells not covered by any arc: {sorted(uncovered)}")
    return issues
