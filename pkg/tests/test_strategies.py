import random

import pytest

from matroidgame import (
    AliceCoveringStrategy,
    BobMkStrategy,
    CoveringError,
    GameConfig,
    GameState,
    GameStatus,
    GreedyStrategy,
    Move,
    Player,
    RandomStrategy,
    SpitefulStrategy,
    UniformMatroid,
    alice_setup_chromatic,
    alice_setup_for_lists,
    alice_setup_fractional,
    apply_move,
    build_mk,
    chromatic_number,
    duplicate_covering,
    graph_degree_lists,
    make_strategy,
    play,
    status,
)
from matroidgame.instances import k4, triangle

from conftest import fixed_size_matroid


def invariant_hook(h=None):
    def hook(config, state, player, move, strat):
        if player is Player.ALICE and hasattr(strat, "invariant_report"):
            problems = strat.invariant_report(config, state)
            assert not problems, problems
        if player is Player.BOB and hasattr(strat, "counters_snapshot"):
            snap = strat.counters_snapshot(state)
            for i in range(len(snap["d"])):
                assert snap["d"][i] >= snap["c"][i] + snap["eps"][i] - 1, snap

    return hook


def test_build_mk_shape():
    mk = build_mk(3)
    assert mk.matroid.n == 150
    assert len(mk.c_elements) == 15
    assert mk.num_d_sets == 45
    assert all(len(mk.d_set(a)) == 3 for a in range(1, 46))
    assert all(mk.matroid.is_independent(mk.d_set(a)) for a in range(1, 46))
    for v in mk.canonical_partition:
        assert mk.matroid.is_independent(v)
    assert mk.matroid.rank(mk.c_elements | mk.d_set(7)) == 6
    assert mk.matroid.ground.label(0) == "c_1_1"
    assert mk.matroid.ground.label(15) == "d_1_1"


def test_transcript_snapshots_recorded():
    mk = build_mk(3)
    config = GameConfig.single(mk.matroid, 4, 1, first_player=Player.ALICE)
    bob = BobMkStrategy(mk, 4)
    t = play(config, GreedyStrategy(), bob, record_snapshots=True)
    assert t.snapshots is not None and len(t.snapshots) == len(t.moves)
    bob_snaps = [s for s in t.snapshots if s is not None]
    assert bob_snaps and all("pairs" in s for s in bob_snaps)


def test_build_mk_rejects_small_k():
    with pytest.raises(ValueError):
        build_mk(2)


def test_covering_multiplicity_validated():
    m = UniformMatroid(3, 2)
    config = GameConfig.single(m, 2)
    with pytest.raises(CoveringError, match="covered"):
        AliceCoveringStrategy(config, [{0, 1}, {2}])  # 1-covering, needs 2


def test_covering_dependence_validated():
    m = UniformMatroid(3, 2)
    config = GameConfig.single(m, 2)
    with pytest.raises(CoveringError, match="dependent"):
        AliceCoveringStrategy(config, [{0, 1, 2}, {0, 1, 2}])


def test_duplicated_chi_partition_is_valid_init():
    m = k4()
    chi, covering = chromatic_number(m)
    config = GameConfig.single(m, 2 * chi)
    alice = AliceCoveringStrategy(config, duplicate_covering(covering))
    assert not alice.invariant_report(config, GameState.initial(config))


def test_dependent_case_hand_trace():
    # U_{2,3}, four colors, reserve sets {a,b}, {a,c}, {b,c}, {}; the reply
    # to (c, 0) evicts a from class 0 and colors it with 1.
    m = UniformMatroid(3, 2)
    config = GameConfig.single(m, 4, first_player=Player.BOB)
    alice = AliceCoveringStrategy(config, [{0, 1}, {0, 2}, {1, 2}, set()])
    state = GameState.initial(config)
    state = apply_move(config, state, Move(2, 0))
    rng = random.Random(0)
    reply = alice.next_move(config, state, rng)
    assert reply == Move(0, 1)
    after = apply_move(config, state, reply)
    assert not alice.invariant_report(config, after)


def test_opening_move_keeps_invariants():
    m = UniformMatroid(3, 2)
    config = GameConfig.single(m, 4, first_player=Player.ALICE)
    alice = AliceCoveringStrategy(config, [{0, 1}, {0, 2}, {1, 2}, set()])
    state = GameState.initial(config)
    mv = alice.next_move(config, state, random.Random(0))
    after = apply_move(config, state, mv)
    assert not alice.invariant_report(config, after)


def test_alice_never_loses_small_battery():
    rng = random.Random(77)
    for _ in range(25):
        m = fixed_size_matroid(rng, rng.randint(1, 10))
        for first in (Player.ALICE, Player.BOB):
            for bob in (GreedyStrategy(), RandomStrategy(5), SpitefulStrategy()):
                config, alice = alice_setup_chromatic(m, first_player=first)
                t = play(config, alice, bob, seed=11, after_move=invariant_hook())
                assert t.outcome is Player.ALICE, (m, first, bob.name)


def test_alice_fractional_setup():
    config, alice = alice_setup_fractional(UniformMatroid(3, 2))
    assert config.multiplicity == 2 and config.colors == 6
    t = play(config, alice, RandomStrategy(8), after_move=invariant_hook())
    assert t.outcome is Player.ALICE


def test_alice_colors_last_element_and_wins():
    m = UniformMatroid(3, 2)
    config, alice = alice_setup_chromatic(m, first_player=Player.ALICE)
    t = play(config, alice, GreedyStrategy())
    assert t.outcome is Player.ALICE
    assert t.moves[-1][0] is Player.ALICE


def test_alice_list_game_setup():
    tri = triangle()
    sizes = graph_degree_lists(tri)
    rng = random.Random(4)
    lists = [rng.sample(range(20, 40), s) for s in sizes]
    config, alice, palette = alice_setup_for_lists(tri, lists)
    assert config.allowed is not None
    t = play(config, alice, SpitefulStrategy(), after_move=invariant_hook())
    assert t.outcome is Player.ALICE


def test_bob_mk_first_reply_trace():
    mk = build_mk(3)
    config = GameConfig.single(mk.matroid, 4, first_player=Player.ALICE)
    bob = BobMkStrategy(mk, 4)
    state = apply_move(config, GameState.initial(config), Move(0, 0))
    reply = bob.next_move(config, state, random.Random(0))
    assert reply == Move(15, 0)  # d_1_1 answers c_1_1
    snap = bob.counters_snapshot(apply_move(config, state, reply))
    assert snap["d"][0] == 1 and snap["c"][0] == 1 and snap["eps"][0] == 1


def test_bob_mk_triple_rule_redesignates():
    mk = build_mk(3)
    config = GameConfig.single(mk.matroid, 4, first_player=Player.ALICE)
    bob = BobMkStrategy(mk, 4)
    # alice opens inside D_1 (triple of color 0) before bob ever used 0
    state = apply_move(config, GameState.initial(config), Move(15, 0))
    reply = bob.next_move(config, state, random.Random(0))
    assert bob._pairs[0] == (5, 9)
    assert reply.color == 0 and reply.element in mk.d_set(5)


def test_bob_mk_rejects_too_many_colors():
    mk = build_mk(3)
    with pytest.raises(ValueError):
        BobMkStrategy(mk, 5)


def test_bob_mk_beats_greedy():
    mk = build_mk(3)
    config = GameConfig.single(mk.matroid, 4, first_player=Player.ALICE)
    bob = BobMkStrategy(mk, 4)
    t = play(config, GreedyStrategy(), bob, after_move=invariant_hook())
    assert t.outcome is Player.BOB
    assert not t.flags


def test_greedy_deterministic_and_legal():
    config = GameConfig.single(k4(), 2)
    t1 = play(config, GreedyStrategy(), GreedyStrategy())
    t2 = play(config, GreedyStrategy(), GreedyStrategy())
    assert t1.moves == t2.moves
    assert not t1.forfeited


def test_random_seeded_reproducible():
    config = GameConfig.single(k4(), 2)
    t1 = play(config, RandomStrategy(5), RandomStrategy(6))
    t2 = play(config, RandomStrategy(5), RandomStrategy(6))
    assert t1.moves == t2.moves
    assert not t1.forfeited


def test_spiteful_minimizes_opponent_moves():
    m = UniformMatroid(3, 2)
    config = GameConfig.single(m, 2, first_player=Player.BOB)
    state = GameState.initial(config)
    sp = SpitefulStrategy()
    mv = sp.next_move(config, state, random.Random(0))
    from matroidgame import legal_moves

    counts = {}
    for cand in legal_moves(config, state):
        after = apply_move(config, state, cand)
        counts[cand] = len(legal_moves(config, after))
    assert counts[mv] == min(counts.values())


def test_make_strategy_names():
    config = GameConfig.single(UniformMatroid(3, 2), 4)
    assert make_strategy("greedy", config).name == "greedy"
    assert make_strategy("random:7", config).name == "random:7"
    assert make_strategy("spiteful", config).name == "spiteful"
    alice = make_strategy("alice-covering", config)
    t = play(config, alice, RandomStrategy(3))
    assert t.outcome is Player.ALICE
    with pytest.raises(ValueError):
        make_strategy("nonsense", config)
    with pytest.raises(ValueError):
        make_strategy("bob-mk", config)


def test_strategy_clone_isolated():
    m = UniformMatroid(3, 2)
    config, alice = alice_setup_chromatic(m)
    twin = alice.clone()
    state = GameState.initial(config)
    state = apply_move(config, state, Move(0, 0))
    alice.next_move(config, state, random.Random(0))
    assert twin._mirror == [frozenset()] * config.colors
