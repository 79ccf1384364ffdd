#!/usr/bin/env python3
"""Probe the lower-bound construction empirically.

Runs the blocking strategy on M_k against a suite of opponents for a range
of color counts, tabulating outcomes, and probes the fractional variant
(multiplicity a > 1) where the same strategy is lifted with no correctness
claim. Exploring whether fewer than 2k-1 colors ever suffice against this
particular defender is the point; universal optimality on 150 elements is
out of reach.
"""
import argparse
import sys
import time

sys.path.insert(0, "src")

from matroidgame import (
    BobMkStrategy,
    GameConfig,
    GreedyStrategy,
    Player,
    RandomStrategy,
    SpitefulStrategy,
    build_mk,
    play,
)


def run_suite(mk, colors, multiplicity, seeds, first_player):
    results = {}
    opponents = [("greedy", lambda: GreedyStrategy()),
                 ("spiteful", lambda: SpitefulStrategy())]
    opponents += [(f"random:{s}", lambda s=s: RandomStrategy(s)) for s in seeds]
    for name, factory in opponents:
        config = GameConfig.single(
            mk.matroid, colors, multiplicity, first_player=first_player
        )
        bob = BobMkStrategy(mk, colors)
        t = play(config, factory(), bob)
        results[name] = (t.outcome.value, len(t.moves), bool(t.flags))
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-k", type=int, default=3)
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--multiplicity", type=int, default=1)
    args = parser.parse_args()

    mk = build_mk(args.k)
    print(f"M_{args.k}: {mk.matroid.n} elements, chromatic number {args.k}")
    for colors in range(2, 2 * args.k - 1):
        for first in (Player.ALICE, Player.BOB):
            t0 = time.time()
            results = run_suite(
                mk, colors, args.multiplicity, range(args.seeds), first
            )
            wins = sum(1 for o, _, _ in results.values() if o == "bob")
            flagged = sum(1 for _, _, f in results.values() if f)
            print(
                f"h={colors} first={first.value:5s} "
                f"blocker wins {wins}/{len(results)}"
                f" (flags: {flagged}, {time.time() - t0:.1f}s)"
            )
            for name, (outcome, plies, _) in sorted(results.items()):
                if outcome != "bob":
                    print(f"    lost to {name} after {plies} plies")


if __name__ == "__main__":
    main()
