import io
import json

from hexlab import cli
from hexlab.lattice import make_rhombus
from hexlab.position import Color, empty_position, place_stones, serialize_position
from hexlab.protocol import Session, serve


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_solve_rhombus3(capsys):
    code, out, err = run_cli(capsys, ["solve", "--board", "rhombus:3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "board,first,win,opening_q,opening_r"
    assert lines[1].startswith("rhombus:3,R,True,")
    assert "wins" in err


def test_cli_scan_zengarden(capsys):
    code, out, _ = run_cli(
        capsys,
        ["scan", "--fixture", "zengarden", "--center", "0,0", "--sizes", "10..14"],
    )
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "size,winner"
    assert all(row.endswith("RedWin") for row in rows[1:])


def test_cli_tour_all_blue(tmp_path, capsys):
    p = empty_position(make_rhombus(2))
    p = place_stones(p, [(Color.BLUE, c) for c in make_rhombus(2).sorted_cells()])
    path = tmp_path / "full_blue_2x2.json"
    path.write_text(serialize_position(p))
    code, out, _ = run_cli(capsys, ["tour", "--position", str(path)])
    assert code == 0
    data = json.loads(out)
    assert data["winner"] == "BlueWin"
    assert len(data["path"]) >= 3


def test_cli_usage_error(capsys):
    assert cli.main(["solve"]) == 2


def test_cli_budget_exit_code(capsys):
    code, _, err = run_cli(
        capsys, ["solve", "--board", "rhombus:4", "--max-nodes", "10"]
    )
    assert code == 3
    assert "budget" in err.lower()


def test_cli_trapezoid_table(capsys):
    code, out, _ = run_cli(capsys, ["trapezoid-table", "--a", "1", "--n", "1..3"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a,n,winner"
    assert len(lines) == 4


def test_cli_fixture_dump(capsys):
    code, out, _ = run_cli(
        capsys,
        ["fixture", "--name", "stripes", "--param", "width=2",
         "--window", "0,3,0,3"],
    )
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "stripes"
    assert len(data["cells"]) == 16


def _roundtrip(session, msg):
    return session.handle(msg)


def test_protocol_play_and_mirror_genmove():
    s = Session()
    r = _roundtrip(s, {"id": 1, "verb": "newgame",
                       "board": {"kind": "window", "qmin": -6, "qmax": 6,
                                  "rmin": -6, "rmax": 5}})
    assert r["ok"]
    r = _roundtrip(s, {"id": 2, "verb": "play", "color": "R", "cell": [0, 0]})
    assert r["ok"]
    r = _roundtrip(s, {"id": 3, "verb": "genmove", "strategy": "mirroring"})
    assert r["ok"]
    assert r["moves"] == [[0, -1]]


def test_protocol_illegal_play_leaves_state():
    s = Session()
    _roundtrip(s, {"id": 1, "verb": "newgame", "board": {"kind": "rhombus", "n": 3}})
    _roundtrip(s, {"id": 2, "verb": "play", "color": "R", "cell": [0, 0]})
    before = _roundtrip(s, {"id": 3, "verb": "save"})["position"]
    r = _roundtrip(s, {"id": 4, "verb": "play", "color": "B", "cell": [0, 0]})
    assert not r["ok"]
    assert r["error"]["kind"] == "IllegalMove"
    after = _roundtrip(s, {"id": 5, "verb": "save"})["position"]
    assert before == after


def test_protocol_unknown_verb():
    s = Session()
    r = _roundtrip(s, {"id": 9, "verb": "teleport"})
    assert not r["ok"]
    assert r["error"]["kind"] == "UnknownVerb"


def test_protocol_replay_determinism():
    requests = [
        {"id": 1, "verb": "newgame", "board": {"kind": "rhombus", "n": 3}, "seed": 5},
        {"id": 2, "verb": "play", "color": "R", "cell": [1, 1]},
        {"id": 3, "verb": "genmove", "strategy": "random"},
        {"id": 4, "verb": "genmove", "strategy": "random"},
        {"id": 5, "verb": "save"},
    ]

    def run():
        s = Session()
        return [s.handle(dict(m)) for m in requests]

    assert run() == run()


def test_protocol_matches_cli_solver(capsys):
    s = Session()
    r = _roundtrip(s, {"id": 1, "verb": "solve", "board": {"kind": "rhombus", "n": 3}})
    assert r["ok"] and r["firstPlayerWin"] is True
    code, out, _ = run_cli(capsys, ["solve", "--board", "rhombus:3"])
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert row[2] == "True"
    assert [int(row[3]), int(row[4])] == r["opening"]


def test_protocol_value_and_witness():
    from hexlab.strategies import bridge_ladder

    p = bridge_ladder(2)
    text = serialize_position(p)
    s = Session()
    r = _roundtrip(s, {"id": 1, "verb": "value", "position": text, "open": "R"})
    assert r["ok"] and r["value"] == 2
    r = _roundtrip(s, {"id": 2, "verb": "witness", "position": text, "open": "R"})
    assert r["ok"] and r["value"] == 2
    assert len(r["region"]) >= 4
    # Positions may also arrive as parsed JSON objects.
    r = _roundtrip(s, {"id": 3, "verb": "value", "position": json.loads(text),
                       "open": "R"})
    assert r["ok"] and r["value"] == 2


def test_protocol_scan_and_fixture():
    s = Session()
    r = _roundtrip(s, {"id": 1, "verb": "scan", "fixture": "zengarden",
                       "center": [0, 0], "sizes": {"start": 10, "stop": 14}})
    assert r["ok"]
    assert all(w == "RedWin" for _, w in r["rows"])
    r = _roundtrip(s, {"id": 2, "verb": "fixture", "name": "bullseye",
                       "window": [-3, 3, -3, 3]})
    assert r["ok"] and r["cells"]


def test_serve_loop_quit():
    lines = [
        json.dumps({"id": 1, "verb": "newgame", "board": {"kind": "rhombus", "n": 2}}),
        json.dumps({"id": 2, "verb": "quit"}),
    ]
    out = io.StringIO()
    serve(infile=iter(line + "\n" for line in lines), outfile=out)
    replies = [json.loads(x) for x in out.getvalue().strip().splitlines()]
    assert replies[0]["ok"] and replies[1]["bye"]


def test_protocol_biased_session_pathbend():
    s = Session()
    r = _roundtrip(s, {"id": 1, "verb": "newgame",
                       "board": {"kind": "biased", "rowRadius": 24,
                                  "channelRows": 6}})
    assert r["ok"]
    r = _roundtrip(s, {"id": 2, "verb": "play", "color": "B", "cell": [1, 2]})
    assert r["ok"]
    r = _roundtrip(s, {"id": 3, "verb": "genmove", "strategy": "pathbend2for1"})
    assert r["ok"]
    assert len(r["moves"]) == 2
    assert sorted(map(tuple, r["moves"])) == [(0, 2), (0, 3)]
    saved = _roundtrip(s, {"id": 4, "verb": "save"})
    assert saved["ok"]
    from hexlab.position import parse_position

    p = parse_position(saved["position"])
    assert p.variant.red_stones == 2


def test_protocol_channel_session_places_three_stones():
    s = Session()
    r = _roundtrip(s, {
        "id": 1, "verb": "newgame",
        "board": {"kind": "window", "qmin": -8, "qmax": 9, "rmin": -20, "rmax": 20},
        "variant": {"red": 3, "blue": 1, "first": "B"},
    })
    assert r["ok"]
    r = _roundtrip(s, {"id": 2, "verb": "play", "color": "B", "cell": [0, 5]})
    assert r["ok"]
    r = _roundtrip(s, {"id": 3, "verb": "genmove", "strategy": "channel3for1"})
    assert r["ok"]
    assert len(r["moves"]) == 3
    assert r["moves"][:2] == [[1, 5], [1, 4]]
