"""Stone-placing games: a universe of locations plus monotone win predicates.

Winners are order-independent functions of the final occupation sets, which
is exactly why games like Gomoku (first to the pattern wins) or Go (stones
can leave the board) are not representable here.  Instances promise that no
red winning set is disjoint from a blue winning set; with explicit families
that promise is checkable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import InvalidParams, NotApplicable, ParseError
from .lattice import GeneralBoard, HexCoord, NEIGHBOR_OFFSETS
from .position import Color
from .solver import Budget
from .winner import _arc_connected


@dataclass
class SSPGame:
    universe: tuple
    red_wins: Callable[[frozenset], bool]
    blue_wins: Callable[[frozenset], bool]
    red_family: Optional[list] = None   # explicit winning sets, when known
    blue_family: Optional[list] = None
    name: str = "sspg"
    degenerate: bool = False

    def wins(self, color: Color, stones: frozenset) -> bool:
        return self.red_wins(stones) if color is Color.RED else self.blue_wins(stones)


def from_families(universe, red_family, blue_family, name="explicit") -> SSPGame:
    universe = tuple(sorted(set(universe)))
    red = [frozenset(s) for s in red_family]
    blue = [frozenset(s) for s in blue_family]
    for fam in (red, blue):
        for s in fam:
            if not s <= set(universe):
                raise InvalidParams(f"winning set {sorted(s)} leaves the universe")
    return SSPGame(
        universe=universe,
        red_wins=lambda s: any(w <= s for w in red),
        blue_wins=lambda s: any(w <= s for w in blue),
        red_family=red,
        blue_family=blue,
        name=name,
    )


def check_nondisjoint(g: SSPGame):
    """(True, None) when every red winning set meets every blue one;
    otherwise (False, (R, B)) with a disjoint pair."""
    if g.red_family is None or g.blue_family is None:
        raise NotApplicable("nondisjointness check needs explicit families")
    for r in g.red_family:
        for b in g.blue_family:
            if not (r & b):
                return False, (r, b)
    return True, None


def enumerate_minimal_winning_sets(g: SSPGame, color: Color) -> list:
    """Brute-force minimal winning sets; exponential, for tiny universes."""
    if len(g.universe) > 20:
        raise InvalidParams("universe too large to enumerate")
    winning = []
    for k in range(len(g.universe) + 1):
        for combo in itertools.combinations(g.universe, k):
            s = frozenset(combo)
            if any(w <= s for w in winning):
                continue
            if g.wins(color, s):
                winning.append(s)
    return winning


def with_enumerated_families(g: SSPGame) -> SSPGame:
    red = enumerate_minimal_winning_sets(g, Color.RED)
    blue = enumerate_minimal_winning_sets(g, Color.BLUE)
    return SSPGame(
        universe=g.universe,
        red_wins=g.red_wins,
        blue_wins=g.blue_wins,
        red_family=red,
        blue_family=blue,
        name=g.name,
        degenerate=g.degenerate,
    )


# -- instances ---------------------------------------------------------------


def hex_as_sspg(board: GeneralBoard) -> SSPGame:
    """Finite Hex as a stone-placing game; matches the connectivity winner."""

    def red_wins(s: frozenset) -> bool:
        stones = dict.fromkeys(s, Color.RED)
        return _arc_connected(board, stones, Color.RED, board.red1, board.red2)

    def blue_wins(s: frozenset) -> bool:
        stones = dict.fromkeys(s, Color.BLUE)
        return _arc_connected(board, stones, Color.BLUE, board.blue1, board.blue2)

    return SSPGame(
        universe=tuple(board.sorted_cells()),
        red_wins=red_wins,
        blue_wins=blue_wins,
        name=f"hex_{board.name}",
    )


def y_game(n: int) -> SSPGame:
    """Triangular board, no boundary coloring; a set wins when one of its
    components touches all three sides.  Both players share the family."""
    if n < 1:
        raise InvalidParams("side must be >= 1")
    cells = frozenset(HexCoord(q, r) for r in range(n) for q in range(n - r))
    bottom = {c for c in cells if c.r == 0}
    left = {c for c in cells if c.q == 0}
    right = {c for c in cells if c.q == n - 1 - c.r}

    def touches_all(s: frozenset) -> bool:
        s = {HexCoord(*c) for c in s} & cells
        seen = set()
        for start in s:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                q, r = stack.pop()
                for dq, dr in NEIGHBOR_OFFSETS:
                    nb = HexCoord(q + dq, r + dr)
                    if nb in s and nb not in seen:
                        seen.add(nb)
                        comp.add(nb)
                        stack.append(nb)
            if comp & bottom and comp & left and comp & right:
                return True
        return False

    return SSPGame(
        universe=tuple(sorted(cells)),
        red_wins=touches_all,
        blue_wins=touches_all,
        name=f"y_{n}",
    )


def shannon_switching(edges: Sequence[tuple], s, t) -> SSPGame:
    """Short claims edges toward an s-t path; Cut claims edges toward a full
    s-t separation.  Red plays Short, Blue plays Cut.

    Edges are (u, v) or (u, v, label); labels allow parallel edges.
    """
    edge_list = tuple(tuple(e) for e in edges)
    if len(set(edge_list)) != len(edge_list):
        raise InvalidParams("duplicate edges; give parallel edges distinct labels")
    degenerate = s == t

    def path_exists(available) -> bool:
        if degenerate:
            return True
        adj: dict = {}
        for e in available:
            u, v = e[0], e[1]
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            if u == t:
                return True
            for v in adj.get(u, ()):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return False

    def short_wins(claimed: frozenset) -> bool:
        return path_exists([e for e in edge_list if e in claimed])

    def cut_wins(claimed: frozenset) -> bool:
        return not path_exists([e for e in edge_list if e not in claimed])

    return SSPGame(
        universe=edge_list,
        red_wins=short_wins,
        blue_wins=cut_wins,
        name="shannon",
        degenerate=degenerate,
    )


# -- generic value recursion over predicate games ----------------------------


class GenericValueSolver:
    def __init__(self, game: SSPGame, open_player: Color,
                 budget: Optional[Budget] = None):
        self.game = game
        self.open_player = open_player
        self.budget = budget or Budget()
        self._memo: dict = {}

    def value(self, red: frozenset, blue: frozenset, to_move: Color) -> Optional[int]:
        key = (red, blue, to_move)
        if key in self._memo:
            return self._memo[key]
        self.budget.tick()
        open_set = red if self.open_player is Color.RED else blue
        if self.game.wins(self.open_player, open_set):
            result = 0
        else:
            empties = [x for x in self.game.universe if x not in red and x not in blue]
            if not empties:
                result = None
            elif to_move is self.open_player:
                best = None
                for x in empties:
                    nr = red | {x} if to_move is Color.RED else red
                    nb = blue | {x} if to_move is Color.BLUE else blue
                    v = self.value(nr, nb, to_move.other)
                    if v is not None and (best is None or v < best):
                        best = v
                        if best == 0:
                            break
                result = None if best is None else best + 1
            else:
                result = 0
                for x in empties:
                    nr = red | {x} if to_move is Color.RED else red
                    nb = blue | {x} if to_move is Color.BLUE else blue
                    v = self.value(nr, nb, to_move.other)
                    if v is None:
                        result = None
                        break
                    result = max(result, v)
        self._memo[key] = result
        return result


def generic_value(g: SSPGame, red_stones, blue_stones, open_player: Color,
                  to_move: Color, budget: Optional[Budget] = None) -> Optional[int]:
    """Value of a predicate-game position; agrees with the board solver on
    the Hex instances."""
    solver = GenericValueSolver(g, open_player, budget)
    return solver.value(frozenset(red_stones), frozenset(blue_stones), to_move)


# -- text format -------------------------------------------------------------
#
# {"universe": [...], "redFamily": [[...]], "blueFamily": [[...]]}
# or {"builtin": "y", "n": 3} / {"builtin": "shannon", "edges": [...],
# "s": ..., "t": ...} / {"builtin": "hex", "board": {...}}


def parse_sspg(text: str) -> SSPGame:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno) from e
    if "builtin" in data:
        kind = data["builtin"]
        if kind == "y":
            return y_game(data["n"])
        if kind == "shannon":
            edges = [tuple(e) for e in data["edges"]]
            return shannon_switching(edges, data["s"], data["t"])
        if kind == "hex":
            from .position import _board_from_json

            board = _board_from_json(data["board"])
            return hex_as_sspg(board)
        raise InvalidParams(f"unknown builtin {kind!r}")
    try:
        universe = [tuple(x) if isinstance(x, list) else x for x in data["universe"]]
        red = [[tuple(x) if isinstance(x, list) else x for x in s]
               for s in data["redFamily"]]
        blue = [[tuple(x) if isinstance(x, list) else x for x in s]
                for s in data["blueFamily"]]
    except KeyError as e:
        raise ParseError(f"missing field {e}") from e
    return from_families(universe, red, blue)
