"""Two independent winner detectors, and why the corner overlaps matter.

Every complete coloring of a well-formed board has exactly one winner, and
the boundary-following tour always names the same player as the chain
search.  Boards whose arcs don't share corners break both halves of that
statement.
"""

import itertools

from hexlab import HexCoord, Outcome, connectivity_winner, gale_tour, make_rhombus
from hexlab.lattice import GeneralBoard
from hexlab.position import Color
from hexlab.winner import connectivity_wins, gale_tour_board

board = make_rhombus(3)
cells = board.sorted_cells()

print("Enumerating all 2^9 colorings of the 3x3 board...")
counts = {Outcome.RED_WIN: 0, Outcome.BLUE_WIN: 0}
disagreements = 0
for bits in range(2 ** len(cells)):
    stones = {
        cells[i]: (Color.RED if bits >> i & 1 else Color.BLUE)
        for i in range(len(cells))
    }
    wins = connectivity_wins(board, stones)
    assert len(wins) == 1, "exactly one winner on every complete coloring"
    tour = gale_tour_board(board, stones)
    expected = Outcome.RED_WIN if wins == {Color.RED} else Outcome.BLUE_WIN
    if tour.outcome is not expected:
        disagreements += 1
    counts[expected] += 1
print(f"  red wins {counts[Outcome.RED_WIN]}, blue wins {counts[Outcome.BLUE_WIN]},"
      f" detector disagreements: {disagreements}")

print("\nA tour on the all-blue 2x2 board:")
b2 = make_rhombus(2)
stones = {c: Color.BLUE for c in b2.cells}
result = gale_tour_board(b2, stones)
print(f"  outcome {result.outcome.value}, {len(result.path)} vertices walked")

print("\nRemove the shared corners and drawn colorings appear:")
no_corners = GeneralBoard(
    cells=board.cells,
    red1=(HexCoord(1, 0),),
    blue1=(HexCoord(2, 1),),
    red2=(HexCoord(1, 2),),
    blue2=(HexCoord(0, 1),),
)
drawn = sum(
    1
    for bits in range(2 ** len(cells))
    if not connectivity_wins(no_corners, {
        cells[i]: (Color.RED if bits >> i & 1 else Color.BLUE)
        for i in range(len(cells))
    })
)
print(f"  {drawn} of 512 colorings have no winner at all")
