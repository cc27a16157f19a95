"""Scanning patterns on growing boards centered at a point.

Winning every sufficiently large centered board is strictly weaker than a
genuine infinite win; the jagged-stripe garden shows the gap, and the
prong pattern shows a position whose fate flips forever with board size.
"""

import math

from hexlab import finite_boards_scan, make_fixture

SQRT3 = math.sqrt(3.0)
GLYPH = {"RedWin": "R", "BlueWin": "B", "NoWinnerYet": "."}


def show(label, report):
    row = "".join(GLYPH[w.value] for w in report.winners)
    stable = report.stable_winner
    tail = f"stable {stable[0].value} from size {stable[1]}" if stable else "no stable winner"
    print(f"  {label:<22} {row}   ({tail})")


print("zen garden, centered at the jag, sizes 10..40:")
show("zengarden", finite_boards_scan(make_fixture("zengarden"), (0.0, 0.0), range(10, 41)))

print("\nprong pattern, centered above the main line, odd sizes 11..39:")
show("doubleprongs",
     finite_boards_scan(make_fixture("doubleprongs"), (0.0, 3 * SQRT3 / 2), range(11, 40, 2)))

print("\ndouble comb, centered on the spine, sizes 8..30:")
show("doublecomb", finite_boards_scan(make_fixture("doublecomb"), (0.0, 0.0), range(8, 31)))

print("\nplain stripes, centered inside a red band, sizes 1..12:")
show("stripes", finite_boards_scan(make_fixture("stripes"), (0.0, 0.0), range(1, 13)))

print("\nbullseye: tiny boards drown inside one ring, large ones see only")
print("finite components and stay undecided:")
show("bullseye", finite_boards_scan(make_fixture("bullseye"), (0.0, 0.0), range(2, 29, 2)))
