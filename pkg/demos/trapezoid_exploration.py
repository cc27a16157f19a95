"""Blue-first trapezoid games, solved exactly within a node budget.

Whether blue keeps winning as the truncation grows is an open question;
the table reports only what the search proved, and prints Unknown for
anything past the budget.
"""

from hexlab import Color, first_player_win, make_rhombus, trapezoid_table
from hexlab.solver import trapezoid_table_csv

print("First-player wins on small standard boards:")
for n in (1, 2, 3, 4):
    win, opening = first_player_win(make_rhombus(n))
    print(f"  rhombus {n}x{n}: {'win' if win else 'loss'}, opening {tuple(opening)}")

print("\nBlue-first trapezoids (a = truncation length, n = base length):")
rows = trapezoid_table([1, 2, 3], range(1, 6))
print("  " + trapezoid_table_csv(rows).replace("\n", "\n  ").rstrip())

print("\nSame cells with a starved budget, reported honestly:")
rows = trapezoid_table([1], [5, 6], budget_nodes=100)
print("  " + trapezoid_table_csv(rows).replace("\n", "\n  ").rstrip())
