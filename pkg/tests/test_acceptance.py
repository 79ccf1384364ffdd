"""Acceptance criteria, one test per numbered requirement.

Each test prints a PASS line with its timing when it completes; run with
`pytest tests/test_acceptance.py -v -s` to see them. The randomized parts
use fixed seeds throughout.
"""
import itertools
import random
import time
from fractions import Fraction

import pytest

from matroidgame import (
    AliceCoveringStrategy,
    BobMkStrategy,
    CoveringFamily,
    ExplicitMatroid,
    GameConfig,
    GreedyStrategy,
    Player,
    RandomStrategy,
    SpitefulStrategy,
    UniformMatroid,
    ViolationCertificate,
    WColoring,
    alice_setup_chromatic,
    alice_setup_for_lists,
    alice_wins_every_bob_line,
    brute_force_condition2,
    build_mk,
    check_condition3,
    chromatic_number,
    color_from_lists,
    condition3_bruteforce,
    duplicate_covering,
    fractional_chromatic,
    game_chromatic_number,
    graph_degree_lists,
    multiple_basis_exchange,
    partition_exchange_to_bases_of_a,
    partition_exchange_to_bases_of_b,
    play,
    replay,
    solve_exact,
    w_covering,
)
from matroidgame.instances import (
    GraphicMatroid,
    connected_graphs,
    disjoint_spanning_tree_pairs,
    doubled_tree,
    explicit_from,
    k4,
    path_graph,
    triangle,
)

from conftest import fixed_size_matroid


def _report(number, label, t0):
    print(f"\nACCEPTANCE {number} {label}: PASS ({time.time() - t0:.1f}s)")


def alice_invariant_hook(config, state, player, move, strat):
    if player is Player.ALICE:
        problems = strat.invariant_report(config, state)
        assert not problems, problems


BOTH = (Player.ALICE, Player.BOB)


def test_acceptance_1_mk_construction():
    t0 = time.time()
    mk = build_mk(3)
    assert mk.matroid.n == 150
    chi, covering = chromatic_number(mk.matroid)
    assert chi == 3
    covering.verify([mk.matroid] * 3, 1)
    assert fractional_chromatic(mk.matroid).value == Fraction(3)
    for a in range(1, mk.num_d_sets + 1):
        assert mk.matroid.rank(mk.c_elements | mk.d_set(a)) == 6
    elapsed = time.time() - t0
    assert elapsed < 60, f"criterion 1 took {elapsed:.1f}s"
    _report(1, "M_3 construction (|E|=150, chi=chi_f=3, rank(C+D_i)=6)", t0)


def _random_instance_pool(seed, count, max_elements):
    rng = random.Random(seed)
    pool = []
    while len(pool) < count:
        kind = rng.choice(["uniform", "graphic", "explicit"])
        if kind == "explicit":
            base = fixed_size_matroid(rng, rng.randint(1, 8))
            m = explicit_from(base)
        else:
            m = fixed_size_matroid(rng, rng.randint(1, max_elements), kind)
        pool.append(m)
    return pool


def test_acceptance_2_alice_two_chi_wins_everything():
    t0 = time.time()
    games = 0
    for m in _random_instance_pool(101, 70, 20):
        for first in BOTH:
            bobs = [GreedyStrategy(), SpitefulStrategy()] + [
                RandomStrategy(s) for s in range(6)
            ]
            for bob in bobs:
                config, alice = alice_setup_chromatic(m, first_player=first)
                transcript = play(
                    config, alice, bob, seed=games, after_move=alice_invariant_hook
                )
                assert transcript.outcome is Player.ALICE, (m, first, bob.name)
                assert not transcript.forfeited
                games += 1
    assert games >= 1000, games

    # exhaustive adversarial opponent on small explicit instances
    rng = random.Random(102)
    exhaustive = [
        ExplicitMatroid.from_bases(2, [(0,), (1,)]),          # parallel pair
        explicit_from(UniformMatroid(3, 2)),
        explicit_from(UniformMatroid(4, 2)),
        explicit_from(triangle()),
        explicit_from(path_graph(3)),
        explicit_from(k4()),
    ]
    while len(exhaustive) < 14:
        m = explicit_from(fixed_size_matroid(rng, rng.randint(2, 6)))
        if chromatic_number(m)[0] <= 2:
            exhaustive.append(m)
    checked = 0
    for m in exhaustive:
        if chromatic_number(m)[0] > 2 or m.n > 8:
            continue
        for first in BOTH:
            config, alice = alice_setup_chromatic(m, first_player=first)
            assert config.colors <= 4
            losing_line = alice_wins_every_bob_line(config, alice)
            assert losing_line is None, (m, first, losing_line)
            checked += 1
    assert checked >= 20
    _report(2, f"2*chi covering strategy ({games} games + {checked} exhaustive)", t0)


def test_acceptance_3_fractional_games():
    t0 = time.time()
    cases = []
    u23 = UniformMatroid(3, 2)
    cover = w_covering([u23] * 3, 2)
    assert isinstance(cover, CoveringFamily)
    cases.append((u23, 2, cover))  # a=2 covering by 3 sets
    g = k4()
    cover = w_covering([g] * 4, 2)
    assert isinstance(cover, CoveringFamily)
    cases.append((g, 2, cover))  # a=2 covering by 4 sets
    games = 0
    for m, a, cover in cases:
        doubled = duplicate_covering(cover)
        for first in BOTH:
            for bob in (GreedyStrategy(), SpitefulStrategy(), RandomStrategy(1),
                        RandomStrategy(2), RandomStrategy(3)):
                config = GameConfig.single(
                    m, len(doubled), multiplicity=a, first_player=first
                )
                alice = AliceCoveringStrategy(config, doubled)
                transcript = play(
                    config, alice, bob, seed=games, after_move=alice_invariant_hook
                )
                assert transcript.outcome is Player.ALICE, (m, first, bob.name)
                games += 1
    _report(3, f"fractional multiplicity-2 games ({games} games)", t0)


def test_acceptance_4_bob_mk_suite():
    t0 = time.time()
    mk = build_mk(3)
    h = 4

    def run(alice, first, seed=None):
        config = GameConfig.single(mk.matroid, h, 1, first_player=first)
        bob = BobMkStrategy(mk, h)

        def hook(config, state, player, move, strat):
            if player is Player.BOB:
                snap = strat.counters_snapshot(state)
                for i in range(h):
                    assert snap["d"][i] >= snap["c"][i] + snap["eps"][i] - 1, snap

        transcript = play(config, alice, bob, seed=seed, after_move=hook)
        assert transcript.outcome is Player.BOB, (alice, first)
        assert not transcript.flags, transcript.flags
        verify = seed is None or seed % 25 == 0
        final = replay(config, transcript, verify=verify)
        for i in range(h):
            assert len(final.classes[i] & mk.c_elements) <= 3
        return transcript

    games = 0
    for first in BOTH:
        run(GreedyStrategy(), first)
        run(SpitefulStrategy(), first)
        games += 2
    for seed in range(500):
        first = BOTH[seed % 2]
        run(RandomStrategy(seed), first, seed=seed)
        games += 1
    _report(4, f"blocking strategy on M_3, h=4 ({games} games, zero losses)", t0)


def test_acceptance_5_weighted_covering_agreement():
    t0 = time.time()
    rng = random.Random(105)
    covering_cases = 0
    for _ in range(600):
        n = rng.randint(1, 10)
        d = rng.randint(1, 4)
        ms = [fixed_size_matroid(rng, n) for _ in range(d)]
        w = [rng.randint(0, d) for _ in range(n)]
        got = w_covering(ms, w)
        ok, worst, lhs, rhs = brute_force_condition2(ms, w)
        assert isinstance(got, CoveringFamily) == ok, (n, d, w, worst)
        if isinstance(got, CoveringFamily):
            got.verify(ms, w)
        else:
            assert got.rank_sum < got.demand
        covering_cases += 1
    condition_cases = 0
    for _ in range(400):
        m = fixed_size_matroid(rng, rng.randint(1, 8))
        sizes = [rng.randint(0, m.n) for _ in range(m.n)]
        weights = [rng.randint(0, min(3, s)) for s in sizes]
        ok, payload = check_condition3(m, sizes, weights)
        ok2, _ = condition3_bruteforce(m, sizes, weights)
        assert ok == ok2, (sizes, weights)
        if ok:
            assert isinstance(payload, WColoring)
            payload.verify(
                m, [frozenset(range(1, s + 1)) for s in sizes], weights
            )
        else:
            assert isinstance(payload, ViolationCertificate)
            assert payload.rank_sum < payload.demand
        condition_cases += 1
    assert covering_cases + condition_cases >= 1000
    _report(5, f"weighted coverings vs subset enumeration "
               f"({covering_cases}+{condition_cases} instances)", t0)


def test_acceptance_6_seymour_and_graded_lists():
    t0 = time.time()
    rng = random.Random(106)
    for _ in range(500):
        m = fixed_size_matroid(rng, rng.randint(1, 9))
        chi, partition = chromatic_number(m)
        pool = range(1, 2 * chi + 4)
        lists = [rng.sample(pool, chi) for _ in range(m.n)]
        got = color_from_lists(m, lists, 1)
        assert isinstance(got, WColoring), (m, lists)
        got.verify(m, lists, 1)
        sizes = [0] * m.n
        for i, cls in enumerate(partition.classes, start=1):
            for e in cls:
                sizes[e] = i
        graded = [rng.sample(pool, s) for s in sizes]
        got = color_from_lists(m, graded, 1)
        assert isinstance(got, WColoring), (m, graded)
        got.verify(m, graded, 1)
    _report(6, "Seymour-size and graded random lists (500 instances)", t0)


def _tree_pair_catalog():
    catalog = [(4, list(k4().edges))]
    for tree in ([(0, 1)], [(0, 1), (1, 2)], [(0, 1), (1, 2), (2, 3)],
                 [(0, 1), (0, 2), (0, 3)], [(0, 1), (1, 2), (2, 3), (3, 4)],
                 [(0, 1), (0, 2), (0, 3), (0, 4)],
                 [(0, 1), (0, 2), (2, 3), (2, 4)]):
        g = doubled_tree(tree)
        catalog.append((g.num_vertices, list(g.edges)))
    for nv, edges in connected_graphs(8):
        if nv == 5 and len(edges) == 8:
            catalog.append((nv, edges))
    return catalog


def test_acceptance_7_basis_exchange_corollaries():
    t0 = time.time()
    pairs_checked = 0
    for nv, edges in _tree_pair_catalog():
        g = GraphicMatroid(nv, edges)
        pairs = [
            (t1, t2)
            for t1, t2 in disjoint_spanning_tree_pairs(nv, edges)
            if sorted(t1) <= sorted(t2)
        ]
        for b1, b2 in pairs:
            pairs_checked += 1
            sorted_b1 = sorted(b1)
            sorted_b2 = sorted(b2)
            for size in range(len(b1) + 1):
                for a1 in map(frozenset, itertools.combinations(sorted_b1, size)):
                    a2 = multiple_basis_exchange(g, b1, b2, a1)
                    assert g.is_basis((b1 - a1) | a2)
                    assert g.is_basis((b2 - a2) | a1)
                    assert any(
                        g.is_basis((b1 - a1) | frozenset(c))
                        and g.is_basis((b2 - frozenset(c)) | a1)
                        for s2 in range(len(b2) + 1)
                        for c in itertools.combinations(sorted_b2, s2)
                    )
            for k in (1, 2, 3):
                for assign in itertools.product(range(k), repeat=len(sorted_b2)):
                    parts = [
                        frozenset(e for e, w in zip(sorted_b2, assign) if w == i)
                        for i in range(k)
                    ]
                    outb = partition_exchange_to_bases_of_b(g, b1, b2, parts)
                    seen = set()
                    for ai, bi in zip(outb, parts):
                        assert g.is_basis((b2 - bi) | ai)
                        assert not (ai & seen)
                        seen |= ai
                    assert seen == b1
                    outa = partition_exchange_to_bases_of_a(g, b1, b2, parts)
                    seen = set()
                    for ai, bi in zip(outa, parts):
                        assert g.is_basis((b1 - ai) | bi)
                        assert not (ai & seen)
                        seen |= ai
                    assert seen == b1
    assert pairs_checked >= 10
    _report(7, f"basis-exchange corollaries ({pairs_checked} tree pairs)", t0)


def test_acceptance_8_degree_lists_and_list_games():
    t0 = time.time()
    rng = random.Random(108)
    graphs = connected_graphs(8)
    assert len(graphs) > 500
    games = 0
    for nv, edges in graphs:
        g = GraphicMatroid(nv, edges)
        sizes = graph_degree_lists(g)
        ok, payload = check_condition3(g, sizes, 2)
        assert ok, (edges, payload)
        ok2, worst = condition3_bruteforce(g, sizes, 2)
        assert ok2, (edges, worst)
        pool = range(1, max(sizes) + 6)
        lists = [rng.sample(pool, s) for s in sizes]
        for bob in (GreedyStrategy(), RandomStrategy(games), SpitefulStrategy()):
            config, alice, _ = alice_setup_for_lists(g, lists)
            transcript = play(
                config, alice, bob, seed=games, after_move=alice_invariant_hook
            )
            assert transcript.outcome is Player.ALICE, (edges, bob.name)
            games += 1
    _report(8, f"degree-list property on {len(graphs)} graphs"
               f" ({games} list games)", t0)


def test_acceptance_10_http_session_end_to_end():
    # Secondary-component criterion, server side: the UI's stubbed-API
    # mirror test lives in frontend/tests. Scripted human-as-Bob game on
    # U_{2,3} against the covering strategy must reach an Alice win, and
    # illegal moves must return 422 with a machine-readable reason.
    t0 = time.time()
    from fastapi.testclient import TestClient

    from matroidgame.server import create_app

    client = TestClient(create_app())
    config = {
        "v": 1,
        "matroid": {"v": 1, "type": "uniform", "n": 3, "r": 2},
        "colors": 4,
        "multiplicity": 1,
        "first_player": "bob",
    }
    r = client.post(
        "/sessions",
        json={"config": config, "humanSide": "bob",
              "engineStrategy": "alice-covering"},
    )
    assert r.status_code == 200
    sid = r.json()["id"]
    r = client.post(f"/sessions/{sid}/moves", json={"element": 0, "color": 0})
    assert r.status_code == 200
    r = client.post(f"/sessions/{sid}/moves", json={"element": 0, "color": 0})
    assert r.status_code == 422
    assert r.json()["detail"]["reason"] == "repeat"
    while True:
        doc = client.get(f"/sessions/{sid}").json()
        if doc["state"]["status"] != "ongoing":
            break
        mv = client.get(f"/sessions/{sid}/legal").json()["moves"][0]
        assert client.post(f"/sessions/{sid}/moves", json=mv).status_code == 200
    assert doc["state"]["status"] == "alice"
    assert len(doc["moves"]) == 3
    _report(10, "HTTP session end-to-end (human as Bob, engine covering)", t0)


def test_acceptance_9_exhaustive_solver_sanity():
    t0 = time.time()
    for n in range(1, 5):
        m = UniformMatroid(n, 1)
        for first in BOTH:
            assert game_chromatic_number(m, first_player=first) == n
    rng = random.Random(109)
    solved = 0
    while solved < 15:
        m = fixed_size_matroid(rng, rng.randint(2, 6))
        chi, _ = chromatic_number(m)
        if chi > 4:
            continue
        cg = game_chromatic_number(m)
        if cg is None:
            continue
        assert cg >= chi, (m, chi, cg)
        for d in range(1, min(cg + 1, 4) + 1):
            config = GameConfig.single(m, d)
            on = solve_exact(config, canonicalize=True).winner
            off = solve_exact(config, canonicalize=False).winner
            assert on is off
        solved += 1
    _report(9, f"solver sanity (chi_g(U_1n)=n, {solved} instances"
               " with chi_g >= chi and canonical agreement)", t0)
