"""The mirrored pairing that spoils every red connection.

Blue copies each red stone at its reflection-and-half-shift partner.  The
stone map stays color-swapped-symmetric, red can only ever cross the line
sloping down-right, and no red chain joins the upper-right boundary to the
lower-left one.  Copying is not meekness: against a red player who feeds
it a full row, the mirror ends up connected first.
"""

from hexlab import Color, mirroring_strategy, simulate
from hexlab.lattice import GeneralBoard, HexCoord, mirror_pair, mirror_window
from hexlab.position import empty_position
from hexlab.scripts import (
    CrosserScript,
    HalfPlaneTrapMonitor,
    MirrorSymmetryMonitor,
    RowFillerScript,
    StraddleSlopeMonitor,
)
from hexlab.winner import connectivity_wins

window = mirror_window(rows_above=12, half_width=24)
pool = [c for c in window.cells if mirror_pair(c) in window]

print("Adversarial red snake vs the mirror, 600 turns:")
res = simulate(
    CrosserScript(seed=5, pool=pool),
    mirroring_strategy(),
    empty_position(window),
    horizon=600,
    monitors=[MirrorSymmetryMonitor(), StraddleSlopeMonitor(),
              HalfPlaneTrapMonitor(window)],
)
print(f"  status {res.status}, monitor violations: {res.violations or 'none'}")

print("\nRed donates a full row; the mirror finishes its own first:")
res = simulate(
    RowFillerScript(row=0, qmin=window.qmin, qmax=window.qmax),
    mirroring_strategy(),
    empty_position(window),
    horizon=2 * (window.qmax - window.qmin + 1),
)
board = GeneralBoard(
    cells=frozenset(window.cells),
    red1=tuple(HexCoord(q, window.rmin) for q in range(window.qmin, window.qmax + 1)),
    blue1=tuple(HexCoord(window.qmax, r) for r in range(window.rmin, window.rmax + 1)),
    red2=tuple(HexCoord(q, window.rmax) for q in range(window.qmin, window.qmax + 1)),
    blue2=tuple(HexCoord(window.qmin, r) for r in range(window.rmin, window.rmax + 1)),
)
print(f"  winner on the embedding board: {connectivity_wins(board, res.final.stones)}")
