"""Parametric board patterns: bullseye, spirals, stripes, combs, and the
jagged-stripe garden, each a total deterministic coloring of the lattice.

Figures are reconstructed parametrically, not tile-for-tile; what matters is
that each pattern exhibits its documented scan or boundedness facts, which
the tests verify.
"""

from __future__ import annotations

from typing import Callable, Optional

from .errors import InvalidParams, UnknownFixture
from .lattice import HexCoord, hex_distance
from .position import Color
from .winner import Pattern


class Fixture(Pattern):
    def __init__(self, name: str, params: dict,
                 fn: Callable[[HexCoord], Optional[Color]]):
        self.name = name
        self.params = params
        self._fn = fn

    def __repr__(self):
        return f"Fixture({self.name!r}, {self.params!r})"

    def color_at(self, cell):
        return self._fn(HexCoord(*cell))


def _require(params: dict, defaults: dict) -> dict:
    unknown = set(params) - set(defaults)
    if unknown:
        raise InvalidParams(f"unknown params {sorted(unknown)}")
    merged = dict(defaults)
    merged.update(params)
    for k, v in merged.items():
        if not isinstance(v, int):
            raise InvalidParams(f"param {k} must be an integer, got {v!r}")
    return merged


# -- bullseye ----------------------------------------------------------------


def _bullseye(params: dict) -> Fixture:
    p = _require(params, {"rings": 5})
    if p["rings"] < 1:
        raise InvalidParams("rings must be >= 1")
    outer = 2 * p["rings"]

    def fn(c):
        d = hex_distance(c, HexCoord(0, 0))
        if d > outer or d % 2 == 1:
            return None
        return Color.RED if (d // 2) % 2 == 0 else Color.BLUE

    return Fixture("bullseye", p, fn)


# -- stripes -----------------------------------------------------------------


def _stripes(params: dict) -> Fixture:
    p = _require(params, {"width": 2})
    if p["width"] < 1:
        raise InvalidParams("width must be >= 1")
    w = p["width"]

    def fn(c):
        band = c.r // w
        return Color.RED if band % 2 == 0 else Color.BLUE

    return Fixture("stripes", p, fn)


# -- double spiral -----------------------------------------------------------
#
# Two interleaved rectangular spiral arms of unit thickness in (col, row)
# coordinates, col = q + floor(r/2).  Axis-aligned steps in that frame are
# hex-adjacent, so each arm is a connected chain winding around the origin
# with pitch two; crossing counts over any line grow with the window.


def _spiral_arm(start_col: int, windings: int) -> set:
    cells = set()
    col, row = start_col, 0

    def walk(dc, dr, steps):
        nonlocal col, row
        for _ in range(steps):
            col += dc
            row += dr
            cells.add((col, row))

    cells.add((col, row))
    for k in range(windings):
        base = start_col + 2 * k
        walk(0, 1, base)                  # north to row = base
        walk(-1, 0, 2 * base + 1)         # west to col = -(base+1)
        walk(0, -1, 2 * base + 1)         # south to row = -(base+1)
        walk(1, 0, 2 * base + 3)          # east to col = base+2
        walk(0, 1, base + 1)              # north back to row 0
    return cells


class _DoubleSpiral(Pattern):
    name = "doublespiral"

    def __init__(self, params):
        self.params = params
        self._radius = 0
        self._colors: dict = {}
        self._grow(8)

    def _grow(self, radius):
        if radius <= self._radius:
            return
        windings = radius // 2 + 2
        colors = {}
        for cr, color in ((0, Color.RED), (1, Color.BLUE)):
            for cell in _spiral_arm(cr, windings):
                prev = colors.get(cell)
                if prev is not None and prev is not color:
                    raise InvalidParams(f"spiral arms collide at {cell}")
                colors[cell] = color
        self._colors = colors
        self._radius = radius

    def color_at(self, cell):
        q, r = cell
        col = q + (r // 2)
        rad = max(abs(col), abs(r))
        if rad > self._radius:
            self._grow(rad + 4)
        return self._colors.get((col, r))


def _doublespiral(params: dict) -> Fixture:
    p = _require(params, {})
    spiral = _DoubleSpiral(p)
    return Fixture("doublespiral", p, spiral.color_at)


# -- bounded arcing paths ----------------------------------------------------
#
# A red staircase rising from row -h to +h (flat tails at both ends) and a
# blue staircase descending in a band strictly above it.  Point A is where
# the red climb crosses the vertical axis x=0.


def _arctanpaths(params: dict) -> Fixture:
    p = _require(params, {"height": 4, "run": 3})
    h, run = p["height"], p["run"]
    if h < 1 or run < 1:
        raise InvalidParams("height and run must be >= 1")

    red_a0 = -(run - 1) * h - run // 2
    red_a = lambda r: red_a0 + (run - 1) * (r + h)

    blue_lo, blue_hi = h + 2, 3 * h + 2
    blue_c_top = -(run * h) - run // 2 - (2 * h + 2) // 2
    blue_c = lambda r: blue_c_top + run * (blue_hi - r)

    def fn(c):
        q, r = c
        if -h <= r <= h:
            lo = red_a(r)
            hi = lo + run - 1
            if r == -h and q <= hi:
                return Color.RED
            if r == h and q >= lo:
                return Color.RED
            if lo <= q <= hi:
                return Color.RED
        if blue_lo <= r <= blue_hi:
            lo = blue_c(r)
            hi = lo + run - 1
            if r == blue_hi and q <= hi:
                return Color.BLUE
            if r == blue_lo and q >= lo:
                return Color.BLUE
            if lo <= q <= hi:
                return Color.BLUE
        return None

    return Fixture("arctanpaths", p, fn)


# -- double prongs -----------------------------------------------------------
#
# Full red rows at every even r, joined by single riser cells on odd rows.
# Riser k sits between rows 2k and 2k+2 at column east_offset + 2k going up
# (west_offset + 2k going down), so the riser a growing rhombus needs at its
# extreme row falls just outside the board on every other scanned size: the
# border lines up on the empty line between the zig-zag joints.  Documented
# scan: center (0, 3*sqrt(3)/2), odd sizes.


def _doubleprongs(params: dict) -> Fixture:
    p = _require(params, {"east_offset": -3, "west_offset": -5})
    ea, we = p["east_offset"], p["west_offset"]

    def fn(c):
        q, r = c
        if r % 2 == 0:
            return Color.RED
        k = (r - 1) // 2
        riser_q = 2 * k + (ea if k >= 0 else we)
        return Color.RED if q == riser_q else None

    return Fixture("doubleprongs", p, fn)


# -- double comb -------------------------------------------------------------


def _doublecomb(params: dict) -> Fixture:
    p = _require(params, {"spacing": 3})
    s = p["spacing"]
    if s < 2:
        raise InvalidParams("spacing must be >= 2")

    def fn(c):
        q, r = c
        if r == 0:
            return Color.RED
        if r > 0:
            anchor = q + (r + 1) // 2
            return Color.RED if anchor % (2 * s) == 0 else None
        anchor = q - (-r) // 2
        return Color.RED if anchor % (2 * s) == s else None

    return Fixture("doublecomb", p, fn)


# -- zen garden --------------------------------------------------------------
#
# Stripes in the red-connecting direction (constant q parity) with a jag: on
# the far side of the seam line r + q/2 = 1/4 the parity flips.  Each red
# stripe climbs the step and continues, while blue stripes are severed at the
# seam, so red wins every sufficiently large rhombus at any center even
# though no single red chain is winning on the infinite board.


def _zengarden(params: dict) -> Fixture:
    p = _require(params, {"phase": 0})
    phase = p["phase"]

    def fn(c):
        q, r = c
        below = (2 * r + q) < 1  # r + q/2 < 1/4, integerized (2r + q <= 0)
        parity = (q + phase) % 2
        if below:
            return Color.RED if parity == 0 else Color.BLUE
        return Color.RED if parity == 1 else Color.BLUE

    return Fixture("zengarden", p, fn)


# -- advantage starting positions -------------------------------------------


def _lineadvantage(params: dict) -> Fixture:
    p = _require(params, {"row": 0})
    row = p["row"]

    def fn(c):
        return Color.RED if c.r == row else None

    return Fixture("lineadvantage", p, fn)


def _quadrantsadvantage(params: dict) -> Fixture:
    p = _require(params, {"gap": 1})
    g = p["gap"]
    if g < 0:
        raise InvalidParams("gap must be >= 0")

    def fn(c):
        x = c.q + c.r / 2.0
        y_rows = c.r  # sign of y matches sign of r
        if x > g and y_rows > g:
            return Color.RED
        if x < -g and y_rows < -g:
            return Color.RED
        return None

    return Fixture("quadrantsadvantage", p, fn)


_REGISTRY = {
    "bullseye": _bullseye,
    "doublespiral": _doublespiral,
    "stripes": _stripes,
    "arctanpaths": _arctanpaths,
    "doubleprongs": _doubleprongs,
    "doublecomb": _doublecomb,
    "zengarden": _zengarden,
    "lineadvantage": _lineadvantage,
    "quadrantsadvantage": _quadrantsadvantage,
}


def fixture_names() -> list[str]:
    return sorted(_REGISTRY)


def make_fixture(name: str, params: Optional[dict] = None) -> Fixture:
    key = name.replace("_", "").replace("-", "").lower()
    builder = _REGISTRY.get(key)
    if builder is None:
        raise UnknownFixture(f"no fixture named {name!r}; have {fixture_names()}")
    return builder(params or {})
