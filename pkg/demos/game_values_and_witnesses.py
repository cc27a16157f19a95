"""Game values, value-reducing play, and locality witnesses.

A bridge ladder of k bridges is worth exactly k moves to its owner, and a
winning play needs to watch only a small fixed region of the board.
"""

from hexlab import (
    Color,
    best_move,
    bridge_ladder,
    game_value,
    locality_witness,
    verify_witness,
)
from hexlab.position import Move, apply_move

print("Bridge ladder values (opponent to move):")
for k in range(6):
    p = bridge_ladder(k)
    print(f"  k={k}: value {game_value(p, Color.RED)}")

print("\nIntruding into a bridge forces the unique saving reply:")
p = bridge_ladder(1)
intruded = apply_move(p, Move(Color.BLUE, list(p.empty_cells())[0]))
reply = best_move(intruded, Color.RED)
print(f"  blue took {intruded.history[-1][1]}, red must answer {reply}")

print("\nLocality witnesses (play and observe only the region D):")
for k in (0, 1, 2):
    p = bridge_ladder(k)
    w = locality_witness(p, Color.RED)
    ok = verify_witness(p, Color.RED, w)
    print(f"  k={k}: |D| = {len(w.region):>2}, value {w.value}, "
          f"exhaustive adversary check: {'ok' if ok else 'FAILED'}")
