import json

import pytest
from click.testing import CliRunner

from matroidgame.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def u23_file(tmp_path):
    path = tmp_path / "u23.json"
    path.write_text(json.dumps({"v": 1, "type": "uniform", "n": 3, "r": 2}))
    return str(path)


@pytest.fixture
def k4_file(tmp_path):
    edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    path = tmp_path / "k4.json"
    path.write_text(json.dumps({"v": 1, "type": "graphic", "vertices": 4, "edges": edges}))
    return str(path)


def test_chromatic_command(runner, k4_file):
    r = runner.invoke(main, ["chromatic", k4_file])
    assert r.exit_code == 0, r.output
    doc = json.loads(r.output)
    assert doc["chromatic"] == 2
    assert len(doc["partition"]["classes"]) == 2


def test_fractional_command(runner, u23_file):
    r = runner.invoke(main, ["fractional", u23_file])
    doc = json.loads(r.output)
    assert doc["fractional"] == "3/2"
    assert (doc["numerator"], doc["denominator"]) == (3, 2)


def test_cover_command_feasible_and_not(runner, u23_file):
    r = runner.invoke(main, ["cover", "-m", u23_file, "-m", u23_file, "-m", u23_file, "-w", "2"])
    assert json.loads(r.output)["feasible"] is True
    r = runner.invoke(main, ["cover", "-m", u23_file])
    doc = json.loads(r.output)
    assert doc["feasible"] is False
    assert doc["certificate"]["subset"] == [0, 1, 2]


def test_list_check_command(runner, u23_file):
    r = runner.invoke(main, ["list-check", u23_file, "--sizes", "[2,2,2]"])
    assert json.loads(r.output)["colorable"] is True
    r = runner.invoke(main, ["list-check", u23_file, "--sizes", "[1,1,1]", "-w", "2"])
    doc = json.loads(r.output)
    assert doc["colorable"] is False and "certificate" in doc


def test_list_color_command(runner, u23_file):
    lists = json.dumps({"0": [1], "1": [2], "2": [1, 2]})
    r = runner.invoke(main, ["list-color", u23_file, "--lists", lists])
    doc = json.loads(r.output)
    assert doc["colorable"] is True
    assert doc["chosen"][0] == [1]


def test_basis_exchange_command(runner, k4_file):
    r = runner.invoke(
        main,
        ["basis-exchange", k4_file, "--b1", "[0,4,5]", "--b2", "[1,2,3]", "--a1", "[0]"],
    )
    assert r.exit_code == 0, r.output
    assert "a2" in json.loads(r.output)


def test_mk_chromatic_pipeline(runner, tmp_path):
    out = tmp_path / "mk3.json"
    r = runner.invoke(main, ["mk", "3", "--out", str(out)])
    assert r.exit_code == 0, r.output
    doc = json.loads(out.read_text())
    matroid_file = tmp_path / "m3.json"
    matroid_file.write_text(json.dumps(doc["matroid"]))
    r = runner.invoke(main, ["chromatic", str(matroid_file)])
    assert json.loads(r.output)["chromatic"] == 3
    assert len(doc["canonical_2covering"]) == 6


def test_play_replay_deterministic(runner, u23_file, tmp_path):
    t1 = tmp_path / "t1.json"
    t2 = tmp_path / "t2.json"
    for out in (t1, t2):
        r = runner.invoke(
            main,
            ["play", u23_file, "--alice", "alice-covering", "--bob", "random",
             "--colors", "4", "--seed", "42", "--out", str(out)],
        )
        assert r.exit_code == 0, r.output
    assert json.loads(t1.read_text())["moves"] == json.loads(t2.read_text())["moves"]
    r = runner.invoke(main, ["replay", str(t1)])
    doc = json.loads(r.output)
    assert doc["verified"] and doc["outcome"] == "alice"


def test_play_mk_with_bob_strategy(runner, tmp_path):
    out = tmp_path / "mk3.json"
    runner.invoke(main, ["mk", "3", "--out", str(out)])
    r = runner.invoke(
        main, ["play", str(out), "--alice", "greedy", "--bob", "bob-mk", "--seed", "0"]
    )
    doc = json.loads(r.output)
    assert doc["outcome"] == "bob"


def test_tournament_csv(runner, u23_file):
    r = runner.invoke(
        main,
        ["tournament", u23_file, "--alice", "alice-covering", "--bob", "random",
         "--colors", "4", "-n", "6", "--format", "csv"],
    )
    lines = r.output.strip().splitlines()
    assert lines[0].startswith("alice,bob,games")
    assert ",6,6,0,0" in lines[1]


def test_solve_command(runner, u23_file):
    r = runner.invoke(main, ["solve", u23_file, "--colors", "2", "--game-chromatic"])
    doc = json.loads(r.output)
    assert doc["winner"] == "alice"
    assert doc["game_chromatic"] == 2


def test_first_player_flag(runner, u23_file):
    r = runner.invoke(
        main,
        ["play", u23_file, "--alice", "alice-covering", "--bob", "greedy",
         "--colors", "4", "--first-player", "alice"],
    )
    doc = json.loads(r.output)
    assert doc["moves"][0]["player"] == "alice"
