"""hexlab: engine, exact solver, and strategy laboratory for finite and
infinite Hex."""

from .lattice import (
    GeneralBoard,
    HexCoord,
    Quadrant,
    Window,
    center,
    hex_distance,
    make_rhombus,
    make_trapezoid,
    mirror_pair,
    mirror_window,
    neighbors,
    quadrant_of,
)
from .position import (
    Color,
    Move,
    Position,
    VariantConfig,
    apply_move,
    empty_position,
    hash_position,
    parse_position,
    place_stones,
    serialize_position,
    transpose_swap,
)
from .winner import (
    Outcome,
    ScanReport,
    connectivity_winner,
    embed_finite_as_infinite,
    finite_boards_scan,
    gale_tour,
)
from .fixtures import Fixture, fixture_names, make_fixture
from .solver import (
    Budget,
    LocalityWitness,
    best_move,
    first_player_win,
    game_value,
    locality_witness,
    trapezoid_table,
    verify_witness,
)
from .sspg import (
    SSPGame,
    check_nondisjoint,
    generic_value,
    hex_as_sspg,
    shannon_switching,
    y_game,
)
from .strategies import (
    BiasedBoardSpec,
    Strategy,
    bridge_ladder,
    channel_3for1_strategy,
    make_biased_position,
    mirroring_strategy,
    obstacle_scheduler,
    path_bend_2for1_strategy,
    simulate,
    strategy_steal,
    surrounding_strategy,
)

__all__ = [
    "GeneralBoard",
    "HexCoord",
    "Quadrant",
    "Window",
    "center",
    "hex_distance",
    "make_rhombus",
    "make_trapezoid",
    "mirror_pair",
    "mirror_window",
    "neighbors",
    "quadrant_of",
    "Color",
    "Move",
    "Position",
    "VariantConfig",
    "apply_move",
    "empty_position",
    "hash_position",
    "parse_position",
    "place_stones",
    "serialize_position",
    "transpose_swap",
    "Outcome",
    "ScanReport",
    "connectivity_winner",
    "embed_finite_as_infinite",
    "finite_boards_scan",
    "gale_tour",
    "Fixture",
    "fixture_names",
    "make_fixture",
    "Budget",
    "LocalityWitness",
    "best_move",
    "first_player_win",
    "game_value",
    "locality_witness",
    "trapezoid_table",
    "verify_witness",
    "SSPGame",
    "check_nondisjoint",
    "generic_value",
    "hex_as_sspg",
    "shannon_switching",
    "y_game",
    "BiasedBoardSpec",
    "Strategy",
    "bridge_ladder",
    "channel_3for1_strategy",
    "make_biased_position",
    "mirroring_strategy",
    "obstacle_scheduler",
    "path_bend_2for1_strategy",
    "simulate",
    "strategy_steal",
    "surrounding_strategy",
]
