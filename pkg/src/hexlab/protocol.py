"""Line-delimited JSON engine protocol.

One request per line, one response per line, matching ids:
  {"id": 1, "verb": "newgame", "board": {...}, "variant": {...}, "seed": 7}
  {"id": 1, "ok": true, ...}
Responses to failed requests carry ok=false and an error message; session
state is unchanged by failed requests.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

from .errors import BudgetExceeded, HexLabError
from .fixtures import fixture_names, make_fixture
from .lattice import HexCoord, Window
from .position import (
    Color,
    Move,
    Position,
    VariantConfig,
    apply_move,
    empty_position,
    parse_position,
    place_stones,
    serialize_position,
    _board_from_json,
)
from .solver import (
    Budget,
    ValueSolver,
    first_player_win,
    game_value,
    locality_witness,
)
from .strategies import (
    BiasedBoardSpec,
    Strategy,
    channel_3for1_strategy,
    mirroring_strategy,
    path_bend_2for1_strategy,
)
from .scripts import RandomScript
from .winner import finite_boards_scan, gale_tour


def _parse_cell(value) -> HexCoord:
    q, r = value
    return HexCoord(int(q), int(r))


def _parse_variant(data: Optional[dict]) -> VariantConfig:
    if not data:
        return VariantConfig()
    return VariantConfig(
        red_stones=int(data.get("red", 1)),
        blue_stones=int(data.get("blue", 1)),
        first_player=Color(data.get("first", "R")),
    )


def _session_board(data: dict):
    kind = data.get("kind")
    if kind == "biased":
        spec = BiasedBoardSpec(
            channel_rows=int(data.get("channelRows", 8)),
            slope_num=int(data.get("slopeNum", 1)),
            slope_den=int(data.get("slopeDen", 2)),
            row_radius=int(data.get("rowRadius", 40)),
        )
        return spec
    return _board_from_json(data)


class ValueReducingStrategy(Strategy):
    """Plays the value-reducing move for the side to move; errors out on
    positions without a value or beyond the node budget."""

    name = "valuereducing"

    def __init__(self, max_nodes: int = 2_000_000):
        self.max_nodes = max_nodes

    def next_moves(self, p: Position) -> list:
        solver = ValueSolver(p.to_move, Budget(max_nodes=self.max_nodes))
        moves = []
        pos = p
        for _ in range(p.remaining):
            k = solver.value(pos)
            if k is None or k < 1:
                raise HexLabError("position has no value for the mover")
            for cell in pos.empty_cells():
                child = apply_move(pos, Move(pos.to_move, cell))
                if solver.value(child) == k - 1:
                    moves.append(cell)
                    pos = child
                    break
        return moves


class Session:
    """One sequential game session driven by protocol messages."""

    def __init__(self):
        self.position: Optional[Position] = None
        self.seed = 0
        self.spec: Optional[BiasedBoardSpec] = None
        self._strategies: dict[str, Strategy] = {}

    # -- verb handlers -------------------------------------------------------

    def do_newgame(self, msg: dict) -> dict:
        board_spec = _session_board(msg.get("board", {"kind": "rhombus", "n": 3}))
        variant = _parse_variant(msg.get("variant"))
        self.seed = int(msg.get("seed", 0))
        self._strategies = {}
        if isinstance(board_spec, BiasedBoardSpec):
            # Materialize the biased start on a plain window so the session
            # stays serializable in the position file format.
            self.spec = board_spec
            spec = board_spec
            cols = [c.q for c in spec.region_cells()]
            window = Window(
                min(cols) - 2,
                max(cols) + 2,
                -spec.row_radius - 1,
                spec.row_radius + 1,
            )
            grants = [
                (Color.BLUE, HexCoord(q, r))
                for q in range(window.qmin, window.qmax + 1)
                for r in range(window.rmin, window.rmax + 1)
                if not spec.in_region(HexCoord(q, r))
            ]
            self.position = place_stones(
                empty_position(
                    window,
                    VariantConfig(red_stones=2, blue_stones=1,
                                  first_player=Color.BLUE),
                ),
                grants,
            )
        else:
            self.spec = None
            self.position = empty_position(board_spec, variant)
        if msg.get("stones"):
            self.position = place_stones(
                self.position,
                [(Color(s[0]), _parse_cell(s[1:3])) for s in msg["stones"]],
            )
        return {}

    def do_play(self, msg: dict) -> dict:
        self._need_game()
        color = Color(msg["color"])
        cell = _parse_cell(msg["cell"])
        self.position = apply_move(self.position, Move(color, cell))
        return {"toMove": self.position.to_move.value,
                "remaining": self.position.remaining}

    def do_genmove(self, msg: dict) -> dict:
        self._need_game()
        strategy = self._strategy(msg.get("strategy", "random"))
        cells = strategy.next_moves(self.position)
        played = []
        for cell in cells:
            self.position = apply_move(self.position, Move(self.position.to_move, cell))
            played.append([cell.q, cell.r])
        return {"moves": played, "toMove": self.position.to_move.value,
                "remaining": self.position.remaining}

    def do_save(self, msg: dict) -> dict:
        self._need_game()
        return {"position": serialize_position(self.position)}

    def do_solve(self, msg: dict) -> dict:
        board = _session_board(msg["board"])
        first = Color(msg.get("first", "R"))
        budget = Budget(max_nodes=int(msg.get("maxNodes", 20_000_000)))
        win, opening = first_player_win(board, first=first, budget=budget)
        out = {"firstPlayerWin": win}
        if opening is not None:
            out["opening"] = [opening.q, opening.r]
        return out

    def do_value(self, msg: dict) -> dict:
        p = parse_position(msg["position"]) if isinstance(msg["position"], str) \
            else parse_position(json.dumps(msg["position"]))
        open_player = Color(msg.get("open", "R"))
        budget = Budget(max_nodes=int(msg.get("maxNodes", 5_000_000)))
        v = game_value(p, open_player, budget)
        return {"value": v}

    def do_witness(self, msg: dict) -> dict:
        p = parse_position(msg["position"]) if isinstance(msg["position"], str) \
            else parse_position(json.dumps(msg["position"]))
        open_player = Color(msg.get("open", "R"))
        budget = Budget(max_nodes=int(msg.get("maxNodes", 5_000_000)))
        w = locality_witness(p, open_player, budget)
        return {
            "value": w.value,
            "region": [[c.q, c.r] for c in sorted(w.region)],
        }

    def do_scan(self, msg: dict) -> dict:
        fx = make_fixture(msg["fixture"], msg.get("params") or {})
        center = tuple(float(x) for x in msg["center"])
        sizes = msg["sizes"]
        if isinstance(sizes, dict):
            sizes = list(range(sizes["start"], sizes["stop"] + 1, sizes.get("step", 1)))
        report = finite_boards_scan(fx, center, sizes)
        return {
            "rows": [[s, w.value] for s, w in zip(report.sizes, report.winners)],
            "stable": None if report.stable_winner is None else
            [report.stable_winner[0].value, report.stable_winner[1]],
        }

    def do_fixture(self, msg: dict) -> dict:
        fx = make_fixture(msg["name"], msg.get("params") or {})
        w = msg.get("window", [-10, 10, -10, 10])
        qmin, qmax, rmin, rmax = (int(x) for x in w)
        cells = []
        for q in range(qmin, qmax + 1):
            for r in range(rmin, rmax + 1):
                color = fx.color_at(HexCoord(q, r))
                if color is not None:
                    cells.append([q, r, color.value])
        return {"cells": cells, "names": fixture_names()}

    def do_tour(self, msg: dict) -> dict:
        p = parse_position(msg["position"]) if isinstance(msg["position"], str) \
            else parse_position(json.dumps(msg["position"]))
        result = gale_tour(p)
        return {
            "winner": result.outcome.value,
            "path": [[a, b] for a, b in result.path],
        }

    # -- plumbing -------------------------------------------------------------

    def _need_game(self):
        if self.position is None:
            raise HexLabError("no game in progress; send newgame first")

    def _strategy(self, name: str) -> Strategy:
        key = name.lower()
        if key in self._strategies:
            return self._strategies[key]
        if key == "mirroring":
            s = mirroring_strategy()
        elif key == "channel3for1":
            if not isinstance(self.position.board, Window):
                raise HexLabError("channel3for1 needs a window board")
            s = channel_3for1_strategy(self.position.board)
        elif key == "pathbend2for1":
            if self.spec is None:
                raise HexLabError("pathbend2for1 needs a biased board session")
            s = path_bend_2for1_strategy(self.spec)
        elif key == "valuereducing":
            s = ValueReducingStrategy()
        elif key == "random":
            pool = None
            if isinstance(self.position.board, Window):
                pool = self.position.board.cells
            s = RandomScript(seed=self.seed, pool=pool)
        else:
            raise HexLabError(f"unknown strategy {name!r}")
        self._strategies[key] = s
        return s

    def handle(self, msg: dict) -> dict:
        msg_id = msg.get("id")
        verb = msg.get("verb")
        handler = getattr(self, f"do_{verb}", None)
        if verb == "quit":
            return {"id": msg_id, "ok": True, "bye": True}
        if handler is None:
            return {"id": msg_id, "ok": False,
                    "error": {"kind": "UnknownVerb", "message": str(verb)}}
        before = self.position
        try:
            result = handler(msg)
        except BudgetExceeded as e:
            self.position = before
            return {"id": msg_id, "ok": False,
                    "error": {"kind": "BudgetExceeded", "message": str(e)}}
        except HexLabError as e:
            self.position = before
            return {"id": msg_id, "ok": False,
                    "error": {"kind": type(e).__name__, "message": str(e)}}
        except (KeyError, ValueError, TypeError, AttributeError) as e:
            self.position = before
            return {"id": msg_id, "ok": False,
                    "error": {"kind": "BadRequest", "message": repr(e)}}
        out = {"id": msg_id, "ok": True}
        out.update(result)
        return out


def serve(infile=None, outfile=None) -> None:
    """Process protocol messages until quit or EOF; one session."""
    infile = infile or sys.stdin
    outfile = outfile or sys.stdout
    session = Session()
    for line in infile:
        line = line.strip()
        if not line:
            continue
        try:
            msg = json.loads(line)
        except json.JSONDecodeError as e:
            print(json.dumps({"id": None, "ok": False,
                              "error": {"kind": "ParseError", "message": e.msg}}),
                  file=outfile, flush=True)
            continue
        response = session.handle(msg)
        print(json.dumps(response), file=outfile, flush=True)
        if response.get("bye"):
            break
