"""Command-line entry points.

Machine-readable results go to stdout (or --out), human summaries to stderr.
Exit codes: 0 success, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, HexLabError
from .fixtures import fixture_names, make_fixture
from .lattice import HexCoord, Window, make_rhombus, make_trapezoid
from .position import Color, parse_position, serialize_position
from .solver import (
    Budget,
    first_player_win,
    game_value,
    locality_witness,
    trapezoid_table,
    trapezoid_table_csv,
)
from .winner import finite_boards_scan, gale_tour
from . import protocol

USAGE_ERROR = 2
BUDGET_ERROR = 3


def _parse_board(text: str):
    kind, _, rest = text.partition(":")
    try:
        if kind == "rhombus":
            return make_rhombus(int(rest))
        if kind == "trapezoid":
            a, n = rest.split(",")
            return make_trapezoid(int(a), int(n))
        if kind == "window":
            qmin, qmax, rmin, rmax = (int(x) for x in rest.split(","))
            return Window(qmin, qmax, rmin, rmax)
    except (ValueError, HexLabError) as e:
        raise SystemExit(f"bad board spec {text!r}: {e}")
    raise SystemExit(f"unknown board kind {kind!r}")


def _parse_sizes(text: str) -> list[int]:
    # "10..40" or "11..39:2"
    rng, _, step = text.partition(":")
    lo, _, hi = rng.partition("..")
    try:
        step_n = int(step) if step else 1
        return list(range(int(lo), int(hi) + 1, step_n))
    except ValueError:
        raise SystemExit(f"bad sizes {text!r}; want LO..HI[:STEP]")


def _parse_params(pairs) -> dict:
    out = {}
    for pair in pairs or ():
        key, _, value = pair.partition("=")
        try:
            out[key] = int(value)
        except ValueError:
            raise SystemExit(f"bad param {pair!r}; want name=int")
    return out


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_position(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_position(fh.read())


def cmd_solve(args) -> int:
    board = _parse_board(args.board)
    budget = Budget(max_nodes=args.max_nodes)
    win, opening = first_player_win(board, first=Color(args.first), budget=budget)
    lines = ["board,first,win,opening_q,opening_r"]
    op = (str(opening.q), str(opening.r)) if opening else ("", "")
    lines.append(f"{args.board},{args.first},{win},{op[0]},{op[1]}")
    _emit(args, "\n".join(lines) + "\n")
    print(
        f"{args.board}: first player ({args.first}) "
        f"{'wins, opening ' + str(tuple(opening)) if win else 'loses'}",
        file=sys.stderr,
    )
    return 0


def cmd_value(args) -> int:
    p = _read_position(args.position)
    v = game_value(p, Color(args.open), Budget(max_nodes=args.max_nodes))
    _emit(args, json.dumps({"value": v}) + "\n")
    print(f"value for {args.open}: {v if v is not None else 'absent'}", file=sys.stderr)
    return 0


def cmd_witness(args) -> int:
    p = _read_position(args.position)
    w = locality_witness(p, Color(args.open), Budget(max_nodes=args.max_nodes))
    out = {
        "position": json.loads(serialize_position(p)),
        "value": w.value,
        "region": [[c.q, c.r] for c in sorted(w.region)],
    }
    _emit(args, json.dumps(out, sort_keys=True) + "\n")
    print(f"value {w.value}, region of {len(w.region)} cells", file=sys.stderr)
    return 0


def cmd_scan(args) -> int:
    if args.fixture:
        pattern = make_fixture(args.fixture, _parse_params(args.param))
    else:
        from .winner import PositionPattern

        pattern = PositionPattern(_read_position(args.position))
    center = tuple(float(x) for x in args.center.split(","))
    report = finite_boards_scan(pattern, center, _parse_sizes(args.sizes))
    _emit(args, report.to_csv())
    stable = report.stable_winner
    print(
        f"scanned {len(report.sizes)} sizes at {center}; "
        + (f"stable {stable[0].value} from size {stable[1]}" if stable else "no stable winner"),
        file=sys.stderr,
    )
    return 0


def cmd_trapezoid_table(args) -> int:
    a_values = [int(x) for x in args.a.split(",")]
    n_values = _parse_sizes(args.n)
    rows = trapezoid_table(a_values, n_values, budget_nodes=args.max_nodes)
    _emit(args, trapezoid_table_csv(rows))
    unknown = sum(1 for r in rows if r.winner == "Unknown")
    print(f"{len(rows)} cells solved, {unknown} unknown", file=sys.stderr)
    return 0


def cmd_fixture(args) -> int:
    fx = make_fixture(args.name, _parse_params(args.param))
    qmin, qmax, rmin, rmax = (int(x) for x in args.window.split(","))
    cells = []
    for q in range(qmin, qmax + 1):
        for r in range(rmin, rmax + 1):
            color = fx.color_at(HexCoord(q, r))
            if color is not None:
                cells.append([q, r, color.value])
    _emit(args, json.dumps({"name": fx.name, "params": fx.params, "cells": cells}) + "\n")
    print(f"{fx.name}: {len(cells)} colored cells in window", file=sys.stderr)
    return 0


def cmd_tour(args) -> int:
    p = _read_position(args.position)
    result = gale_tour(p)
    _emit(
        args,
        json.dumps({"winner": result.outcome.value,
                    "path": [[a, b] for a, b in result.path]}) + "\n",
    )
    print(f"tour: {result.outcome.value} after {len(result.path)} vertices",
          file=sys.stderr)
    return 0


def cmd_simulate(args) -> int:
    from .position import VariantConfig, empty_position
    from .scripts import RandomScript
    from .strategies import mirroring_strategy, channel_3for1_strategy, simulate

    board = _parse_board(args.board)
    variant = VariantConfig(
        red_stones=args.red_stones,
        blue_stones=args.blue_stones,
        first_player=Color(args.first),
    )
    p0 = empty_position(board, variant)

    def build(name, seed):
        if name == "mirroring":
            return mirroring_strategy()
        if name == "channel3for1":
            return channel_3for1_strategy(board)
        if name == "random":
            pool = board.cells
            return RandomScript(seed=seed, pool=pool)
        raise SystemExit(f"unknown strategy {name!r} for simulate")

    red = build(args.red, args.seed)
    blue = build(args.blue, args.seed + 1)
    result = simulate(red, blue, p0, args.turns)
    _emit(args, json.dumps(result.transcript_json()) + "\n")
    print(f"{result.status} after {result.turns} turns", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    protocol.serve()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexlab",
        description="Finite and infinite Hex: solver, scans, strategies, engine protocol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="full search for the first-player win")
    p.add_argument("--board", required=True, help="rhombus:N | trapezoid:A,N")
    p.add_argument("--first", default="R", choices=["R", "B"])
    p.add_argument("--max-nodes", type=int, default=50_000_000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("value", help="game value of a position file")
    p.add_argument("--position", required=True)
    p.add_argument("--open", default="R", choices=["R", "B"])
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_value)

    p = sub.add_parser("witness", help="locality witness for a valued position")
    p.add_argument("--position", required=True)
    p.add_argument("--open", default="R", choices=["R", "B"])
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("scan", help="winner on growing rhombi at a center")
    p.add_argument("--fixture")
    p.add_argument("--position")
    p.add_argument("--param", action="append", metavar="NAME=INT")
    p.add_argument("--center", required=True, metavar="X,Y")
    p.add_argument("--sizes", required=True, metavar="LO..HI[:STEP]")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("trapezoid-table", help="solve blue-first trapezoids")
    p.add_argument("--a", default="1,2", help="comma list of truncation lengths")
    p.add_argument("--n", default="1..5", help="range of base lengths LO..HI")
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_trapezoid_table)

    p = sub.add_parser("fixture", help="dump a fixture's colors over a window")
    p.add_argument("--name", required=True, help="|".join(fixture_names()))
    p.add_argument("--param", action="append", metavar="NAME=INT")
    p.add_argument("--window", default="-10,10,-10,10", metavar="QMIN,QMAX,RMIN,RMAX")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_fixture)

    p = sub.add_parser("tour", help="boundary tour winner of a complete position")
    p.add_argument("--position", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_tour)

    p = sub.add_parser("simulate", help="scripted playout with a transcript")
    p.add_argument("--board", required=True)
    p.add_argument("--red", default="random")
    p.add_argument("--blue", default="random")
    p.add_argument("--turns", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--red-stones", type=int, default=1)
    p.add_argument("--blue-stones", type=int, default=1)
    p.add_argument("--first", default="R", choices=["R", "B"])
    p.add_argument("--out")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("serve", help="line-delimited JSON protocol on stdio")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return BUDGET_ERROR
    except SystemExit as e:
        if isinstance(e.code, str):
            print(e.code, file=sys.stderr)
            return USAGE_ERROR
        return e.code if e.code is not None else 0
    except (HexLabError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
