"""Game state: colorings, moves under m-for-n rules, hashing, serialization.

Positions are immutable; apply_move returns a new position.  A stone, once
placed, is never moved or recolored.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Union

from .errors import (
    IllegalMove,
    InvalidPosition,
    OutOfBounds,
    OutOfTurn,
    ParseError,
    Unsupported,
)
from .lattice import GeneralBoard, HexCoord, Window, make_rhombus, make_trapezoid

Board = Union[GeneralBoard, Window]


class Color(Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class VariantConfig:
    """m-for-n stone counts: Red places red_stones per turn, Blue blue_stones."""

    red_stones: int = 1
    blue_stones: int = 1
    first_player: Color = Color.RED

    def __post_init__(self):
        if self.red_stones < 1 or self.blue_stones < 1:
            raise InvalidPosition("per-turn stone counts must be positive")

    def allotment(self, color: Color) -> int:
        return self.red_stones if color is Color.RED else self.blue_stones


@dataclass(frozen=True)
class Move:
    player: Color
    cell: HexCoord


# Stable 64-bit mix values so position hashes are reproducible across runs.
_zobrist_cache: dict = {}


def _zobrist(key) -> int:
    z = _zobrist_cache.get(key)
    if z is None:
        digest = hashlib.blake2b(repr(key).encode(), digest_size=8).digest()
        z = int.from_bytes(digest, "little")
        _zobrist_cache[key] = z
    return z


@dataclass(frozen=True, eq=False)
class Position:
    board: Board
    stones: dict  # HexCoord -> Color; treated as immutable
    to_move: Color
    remaining: int
    variant: VariantConfig
    history: tuple  # of (Color, HexCoord), in play order
    stones_digest: int = 0

    def __eq__(self, other):
        if not isinstance(other, Position):
            return NotImplemented
        return (
            self.board == other.board
            and self.stones == other.stones
            and self.to_move == other.to_move
            and self.remaining == other.remaining
            and self.variant == other.variant
            and self.history == other.history
        )

    def color_at(self, cell) -> Optional[Color]:
        return self.stones.get(cell)

    def empty_cells(self) -> list[HexCoord]:
        return sorted(c for c in self.board.cells if c not in self.stones)

    def is_full(self) -> bool:
        return len(self.stones) == len(self.board.cells)


def empty_position(board: Board, variant: VariantConfig = VariantConfig()) -> Position:
    return Position(
        board=board,
        stones={},
        to_move=variant.first_player,
        remaining=variant.allotment(variant.first_player),
        variant=variant,
        history=(),
        stones_digest=0,
    )


def place_stones(p: Position, placements: Iterable[tuple[Color, HexCoord]]) -> Position:
    """Set-up helper: add stones without turn accounting (fixtures, imports)."""
    stones = dict(p.stones)
    digest = p.stones_digest
    history = list(p.history)
    for color, cell in placements:
        cell = HexCoord(*cell)
        if cell not in p.board:
            raise OutOfBounds(f"{cell} not on board")
        if cell in stones:
            raise InvalidPosition(f"duplicate stone at {cell}")
        stones[cell] = color
        digest ^= _zobrist((cell.q, cell.r, color.value))
        history.append((color, cell))
    return replace(p, stones=stones, stones_digest=digest, history=tuple(history))


def apply_move(p: Position, m: Move) -> Position:
    """One stone placed by the player on turn; flips the turn when the
    mover's allotment is spent."""
    if m.player is not p.to_move:
        raise OutOfTurn(f"{m.player.name} played on {p.to_move.name}'s turn")
    cell = HexCoord(*m.cell)
    if cell not in p.board:
        raise OutOfBounds(f"{cell} not on board")
    if cell in p.stones:
        raise IllegalMove(f"{cell} is occupied")
    if p.remaining < 1:
        raise OutOfTurn("no stones remaining this turn")
    stones = dict(p.stones)
    stones[cell] = m.player
    digest = p.stones_digest ^ _zobrist((cell.q, cell.r, m.player.value))
    remaining = p.remaining - 1
    to_move = p.to_move
    if remaining == 0:
        to_move = p.to_move.other
        remaining = p.variant.allotment(to_move)
    return Position(
        board=p.board,
        stones=stones,
        to_move=to_move,
        remaining=remaining,
        variant=p.variant,
        history=p.history + ((m.player, cell),),
        stones_digest=digest,
    )


def hash_position(p: Position) -> int:
    """64-bit digest: equal stones/turn/counter hash equal; incremental
    updates through apply_move match a from-scratch recompute."""
    h = p.stones_digest
    h ^= _zobrist(("to_move", p.to_move.value))
    h ^= _zobrist(("remaining", p.remaining))
    return h & 0xFFFFFFFFFFFFFFFF


def recompute_digest(p: Position) -> int:
    d = 0
    for cell, color in p.stones.items():
        d ^= _zobrist((cell.q, cell.r, color.value))
    return d


def _transpose_board(board: Board) -> Board:
    if isinstance(board, GeneralBoard):
        if board.name.startswith("rhombus_"):
            return board
        raise Unsupported("transpose_swap requires a rhombus board")
    if isinstance(board, Window):
        if board.qmin == board.rmin and board.qmax == board.rmax:
            return board
        raise Unsupported("transpose_swap requires a square window")
    raise Unsupported(f"cannot transpose {board!r}")


def transpose_swap(p: Position) -> Position:
    """Reflect on the main diagonal and swap colors.

    On the rhombus this exactly exchanges the two players' winning
    configurations (the map behind strategy stealing).  An involution.
    """
    board = _transpose_board(p.board)
    stones = {HexCoord(r, q): color.other for (q, r), color in p.stones.items()}
    variant = VariantConfig(
        red_stones=p.variant.blue_stones,
        blue_stones=p.variant.red_stones,
        first_player=p.variant.first_player.other,
    )
    history = tuple((color.other, HexCoord(r, q)) for color, (q, r) in p.history)
    out = Position(
        board=board,
        stones=stones,
        to_move=p.to_move.other,
        remaining=p.remaining,
        variant=variant,
        history=history,
    )
    return replace(out, stones_digest=recompute_digest(out))


# ---------------------------------------------------------------------------
# Position file format (JSON, UTF-8).  Bit-exact round-trip: serialization is
# canonical (sorted keys, fixed separators), so serialize(parse(t)) == t for
# canonical t and parse(serialize(p)) == p always.
# ---------------------------------------------------------------------------


def _board_to_json(board: Board) -> dict:
    if isinstance(board, Window):
        return {
            "kind": "window",
            "qmax": board.qmax,
            "qmin": board.qmin,
            "rmax": board.rmax,
            "rmin": board.rmin,
        }
    parts = board.name.split("_")
    if parts[0] == "rhombus" and len(parts) == 2 and parts[1].isdigit():
        return {"kind": "rhombus", "n": int(parts[1])}
    if (
        parts[0] == "trapezoid"
        and len(parts) == 3
        and parts[1].isdigit()
        and parts[2].isdigit()
    ):
        return {"kind": "trapezoid", "a": int(parts[1]), "n": int(parts[2])}
    return {
        "kind": "general",
        "cells": [[q, r] for q, r in sorted(board.cells)],
        "arcs": [[[q, r] for q, r in arc] for arc in board.arcs],
    }


def _board_from_json(data: dict) -> Board:
    kind = data.get("kind")
    if kind == "window":
        return Window(data["qmin"], data["qmax"], data["rmin"], data["rmax"])
    if kind == "rhombus":
        return make_rhombus(data["n"])
    if kind == "trapezoid":
        return make_trapezoid(data["a"], data["n"])
    if kind == "general":
        arcs = [tuple(HexCoord(*c) for c in arc) for arc in data["arcs"]]
        return GeneralBoard(
            cells=frozenset(HexCoord(*c) for c in data["cells"]),
            red1=arcs[0],
            blue1=arcs[1],
            red2=arcs[2],
            blue2=arcs[3],
        )
    raise InvalidPosition(f"unknown board kind {kind!r}")


def serialize_position(p: Position) -> str:
    data = {
        "board": _board_to_json(p.board),
        "variant": {
            "blue": p.variant.blue_stones,
            "first": p.variant.first_player.value,
            "red": p.variant.red_stones,
        },
        "stones": [[color.value, cell.q, cell.r] for color, cell in p.history],
        "toMove": p.to_move.value,
        "remaining": p.remaining,
    }
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def parse_position(text: str) -> Position:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise ParseError("position file must be a JSON object")
    try:
        board = _board_from_json(data["board"])
        v = data["variant"]
        variant = VariantConfig(
            red_stones=v["red"],
            blue_stones=v["blue"],
            first_player=Color(v["first"]),
        )
        stones_list = [
            (Color(entry[0]), HexCoord(int(entry[1]), int(entry[2])))
            for entry in data["stones"]
        ]
        to_move = Color(data["toMove"])
        remaining = int(data["remaining"])
    except (KeyError, ValueError, TypeError) as e:
        raise InvalidPosition(f"bad position file: {e}") from e
    if remaining < 1 or remaining > variant.allotment(to_move):
        raise InvalidPosition(f"remaining={remaining} exceeds allotment")
    p = empty_position(board, variant)
    p = place_stones(p, stones_list)
    return replace(p, to_move=to_move, remaining=remaining)
