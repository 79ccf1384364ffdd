import json

import pytest

from matroidgame import (
    ExplicitMatroid,
    GameConfig,
    GreedyStrategy,
    Player,
    TransversalMatroid,
    UniformMatroid,
    play,
    replay,
)
from matroidgame.instances import k4
from matroidgame.serialize import (
    FormatError,
    config_from_json,
    config_to_json,
    graphic_from_dimacs,
    graphic_from_edge_list,
    matroid_from_json,
    matroid_to_json,
    transcript_from_json,
    transcript_to_json,
)


def roundtrip(m):
    doc = matroid_to_json(m)
    json.dumps(doc)  # must be serializable
    back = matroid_from_json(doc)
    assert back.n == m.n
    for mask in range(min(1 << m.n, 256)):
        sub = [e for e in range(m.n) if mask >> e & 1]
        assert back.is_independent(sub) == m.is_independent(sub)


def test_matroid_roundtrips():
    roundtrip(UniformMatroid(4, 2))
    roundtrip(k4())
    roundtrip(TransversalMatroid(4, [[0, 1], [1, 2, 3]]))
    roundtrip(ExplicitMatroid.from_bases(3, [(0, 1), (1, 2)]))
    roundtrip(k4().contract([0]))


def test_labels_roundtrip():
    m = UniformMatroid(2, 1, labels=["x", "y"])
    back = matroid_from_json(matroid_to_json(m))
    assert back.ground.labels == ("x", "y")


def test_unknown_type_rejected():
    with pytest.raises(FormatError):
        matroid_from_json({"type": "mystery"})


def test_edge_list_parsing():
    m = graphic_from_edge_list("0 1\n1 2\n# comment\n2 0\n")
    assert m.n == 3 and m.num_vertices == 3
    assert not m.is_independent([0, 1, 2])
    with pytest.raises(FormatError):
        graphic_from_edge_list("0 1 2\n")


def test_dimacs_parsing():
    text = "c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n"
    m = graphic_from_dimacs(text)
    assert m.num_vertices == 3 and m.n == 3
    assert not m.is_independent([0, 1, 2])
    with pytest.raises(FormatError):
        graphic_from_dimacs("e 1 2\n")


def test_config_roundtrip_single_matroid():
    cfg = GameConfig.single(
        UniformMatroid(3, 2), 4, multiplicity=2, first_player=Player.ALICE
    )
    doc = config_to_json(cfg, meta={"note": "x"})
    back = config_from_json(doc)
    assert back.colors == 4
    assert back.multiplicity == 2
    assert back.first_player is Player.ALICE
    assert doc["meta"] == {"note": "x"}


def test_config_roundtrip_lists():
    cfg = GameConfig.single(
        UniformMatroid(2, 1), 2, allowed=[{0}, {0, 1}]
    )
    back = config_from_json(config_to_json(cfg))
    assert back.allowed == (frozenset({0}), frozenset({0, 1}))


def test_transcript_roundtrip_and_replay():
    cfg = GameConfig.single(UniformMatroid(3, 2), 2)
    t = play(cfg, GreedyStrategy(), GreedyStrategy())
    doc = transcript_to_json(t, config_to_json(cfg))
    json.dumps(doc)
    back, back_cfg = transcript_from_json(doc)
    assert back.moves == t.moves
    assert back.outcome == t.outcome
    replay(back_cfg, back)
