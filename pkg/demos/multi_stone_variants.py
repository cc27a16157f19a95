"""Handicap variants: three-for-one, two-for-one, and surround-everything.

With three stones a turn, red guards a two-column diagonal with assigned
opposite pairs and pushes the chain outward.  With two, red keeps a target
path alive by bending it around attacks at fresh extremes, banking a
progress move each time.  With 6n+1, red simply rings every blue stone.
"""

from hexlab import (
    BiasedBoardSpec,
    Color,
    channel_3for1_strategy,
    make_biased_position,
    path_bend_2for1_strategy,
    simulate,
    surrounding_strategy,
)
from hexlab.lattice import Window
from hexlab.position import VariantConfig, empty_position
from hexlab.scripts import (
    ChannelCrossPairMonitor,
    ChannelNotBridgedMonitor,
    ChannelSpanMonitor,
    ExtremeAttackerScript,
    PathBendMonitor,
    RandomScript,
    SurroundMonitor,
    channel_hammer,
)

print("three-for-one vs a channel hammer (T = 300):")
window = Window(-10, 11, -210, 210)
variant = VariantConfig(red_stones=3, blue_stones=1, first_player=Color.RED)
res = simulate(
    channel_3for1_strategy(window),
    channel_hammer(window),
    empty_position(window, variant),
    horizon=300,
    monitors=[ChannelCrossPairMonitor(), ChannelSpanMonitor(min_rows=100)],
)
print(f"  status {res.status}, violations: {res.violations or 'none'}")

print("\ntwo-for-one on the blue-biased board vs an extreme attacker (T = 500):")
spec = BiasedBoardSpec(channel_rows=8, row_radius=320)
p0 = make_biased_position(spec)
red = path_bend_2for1_strategy(spec)
res = simulate(
    red,
    ExtremeAttackerScript(red, seed=2),
    p0,
    horizon=500,
    monitors=[PathBendMonitor(red), ChannelNotBridgedMonitor(spec)],
)
print(f"  status {res.status}, bends {len(red.bend_rows)}, "
      f"progress {red.progress_count}, violations: {res.violations or 'none'}")

print("\nseven-for-one surround vs random blue (T = 200):")
win = Window(-14, 14, -20, 20)
variant = VariantConfig(red_stones=7, blue_stones=1, first_player=Color.RED)
res = simulate(
    surrounding_strategy(win),
    RandomScript(seed=8, pool=win.cells),
    empty_position(win, variant),
    horizon=200,
    monitors=[SurroundMonitor(win)],
)
print(f"  status {res.status}, violations: {res.violations or 'none'}")
