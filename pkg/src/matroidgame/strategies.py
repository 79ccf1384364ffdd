"""Player strategies and the lower-bound transversal matroid family.

AliceCoveringStrategy turns any 2k-covering by per-color independent sets
into a never-losing plan for the k-multiplicity game: it keeps shrinking
reserve sets V_i so that, after each of its moves, (1) V_i is disjoint from
the colored set U_i, (2) U_i + V_i stays independent in matroid i, and
(3) every element satisfies w(e) + 2 c(e) = 2k, where w counts reserve sets
holding e and c its acquired colors.

BobMkStrategy plays the blocking side on the transversal matroids built by
build_mk(k): it pairs designated D-sets per color and keeps the count of
pair elements in a color at least c_i + eps_i - 1, which caps every color
at k elements inside the hub block C and starves the game of completions
whenever fewer than 2k-1 colors are available.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .game import (
    GameConfig,
    GameState,
    Move,
    Player,
    StrategyError,
    legal_moves,
    move_error,
    state_checkers,
)
from .listcolor import color_from_lists
from .matroids import Matroid, TransversalMatroid
from .union import (
    CoveringError,
    CoveringFamily,
    ViolationCertificate,
    chromatic_number,
    fractional_chromatic,
    w_covering,
)


class InvariantViolation(RuntimeError):
    """A strategy's internal bookkeeping broke; a bug, never a bad move."""


class GreedyStrategy:
    """First legal move in element-major, color-minor order."""

    name = "greedy"

    def next_move(self, config, state, rng) -> Move:
        moves = legal_moves(config, state)
        if not moves:
            raise StrategyError("no legal move available")
        return moves[0]

    def clone(self) -> "GreedyStrategy":
        return GreedyStrategy()


class RandomStrategy:
    """Uniformly random legal move; seedable for reproducibility."""

    def __init__(self, seed: int | None = None):
        self.seed = seed
        self._rng = random.Random(seed) if seed is not None else None
        self.name = "random" if seed is None else f"random:{seed}"

    def next_move(self, config, state, rng) -> Move:
        moves = legal_moves(config, state)
        if not moves:
            raise StrategyError("no legal move available")
        chooser = self._rng if self._rng is not None else rng
        return moves[chooser.randrange(len(moves))]

    def clone(self) -> "RandomStrategy":
        c = RandomStrategy(self.seed)
        if self._rng is not None:
            c._rng.setstate(self._rng.getstate())
        return c


class SpitefulStrategy:
    """Pick the legal move leaving the opponent the fewest legal moves."""

    name = "spiteful"

    def next_move(self, config, state, rng) -> Move:
        moves = legal_moves(config, state)
        if not moves:
            raise StrategyError("no legal move available")
        k = config.multiplicity
        columns: list[list[int]] = [[] for _ in range(config.colors)]
        for mv in moves:
            columns[mv.color].append(mv.element)
        col_sets = [set(c) for c in columns]
        checkers = state_checkers(config, state)
        best = None
        for mv in moves:
            e, i = mv.element, mv.color
            full = state.counts[e] + 1 == k
            count = 0
            for j in range(config.colors):
                if j == i:
                    continue
                count += len(columns[j])
                if full and e in col_sets[j]:
                    count -= 1
            probe = checkers[i].clone()
            probe.add(e)
            for f in columns[i]:
                if f == e:
                    continue
                if probe.can_add(f):
                    count += 1
            key = (count, e, i)
            if best is None or key < best[0]:
                best = (key, mv)
        return best[1]

    def clone(self) -> "SpitefulStrategy":
        return SpitefulStrategy()


def _move_delta(
    previous: Sequence[frozenset[int]], state: GameState
) -> list[tuple[int, int]]:
    out = []
    for i, cls in enumerate(state.classes):
        for e in cls - previous[i]:
            out.append((e, i))
    return out


class AliceCoveringStrategy:
    """Alice's plan from a 2k-covering by per-color independent sets."""

    name = "alice-covering"

    def __init__(self, config: GameConfig, covering: Iterable[Iterable[int]]):
        vsets = [set(v) for v in covering]
        k = config.multiplicity
        if len(vsets) != config.colors:
            raise CoveringError("covering must provide one set per color")
        w = [0] * config.n
        for v in vsets:
            for e in v:
                w[e] += 1
        for e, we in enumerate(w):
            if we != 2 * k:
                raise CoveringError(
                    f"element {e} covered {we} times, the strategy needs {2 * k}"
                )
        for i, v in enumerate(vsets):
            if not config.matroids[i].is_independent(v):
                raise CoveringError(f"covering set {i} is dependent in its matroid")
            if config.allowed is not None:
                for e in v:
                    if i not in config.allowed[e]:
                        raise CoveringError(
                            f"covering set {i} holds element {e} outside its list"
                        )
        self._config = config
        self._vsets = vsets
        self._w = w
        self._mirror = [frozenset() for _ in range(config.colors)]

    def clone(self) -> "AliceCoveringStrategy":
        c = type(self).__new__(type(self))
        c._config = self._config
        c._vsets = [set(v) for v in self._vsets]
        c._w = list(self._w)
        c._mirror = list(self._mirror)
        return c

    def _shrink(self, e: int, amount: int, prefer: int | None = None) -> None:
        order = []
        if prefer is not None and e in self._vsets[prefer]:
            order.append(prefer)
        order.extend(
            i for i in range(len(self._vsets)) if i != prefer and e in self._vsets[i]
        )
        if len(order) < amount:
            raise InvariantViolation(
                f"element {e} lies in {len(order)} reserve sets, need {amount}"
            )
        for i in order[:amount]:
            self._vsets[i].discard(e)
            self._w[e] -= 1

    def next_move(self, config, state, rng) -> Move:
        if config is not self._config:
            raise StrategyError("strategy bound to a different game configuration")
        k = config.multiplicity
        delta = _move_delta(self._mirror, state)
        if len(delta) > 1:
            raise StrategyError("more than one opposing move since the last turn")

        if delta:
            x, j = delta[0]
            u_and_v = self._mirror[j] | self._vsets[j]
            if x not in u_and_v and not config.matroids[j].is_independent(
                u_and_v | {x}
            ):
                move = self._dependent_reply(config, state, x, j, u_and_v)
            else:
                self._shrink(x, 2, prefer=j)
                move = self._proactive_move(config, state)
        else:
            move = self._proactive_move(config, state)

        self._mirror = [
            cls | {move.element} if i == move.color else cls
            for i, cls in enumerate(state.classes)
        ]
        self._self_check(config, state, move)
        return move

    def _dependent_reply(self, config, state, x, j, u_and_v) -> Move:
        circuit = config.matroids[j].fundamental_circuit(u_and_v, x)
        in_reserve = circuit & self._vsets[j]
        if not in_reserve:
            raise InvariantViolation("eviction circuit misses the reserve set")
        y = min(in_reserve)
        self._vsets[j].discard(y)
        self._w[y] -= 1
        others = [l for l in range(config.colors) if l != j and y in self._vsets[l]]
        if not others:
            raise InvariantViolation(f"evicted element {y} has no second reserve set")
        l = min(others)
        self._vsets[l].discard(y)
        self._w[y] -= 1
        self._shrink(x, 2)
        return Move(y, l)

    def _proactive_move(self, config, state) -> Move:
        k = config.multiplicity
        y = next((e for e in range(config.n) if state.counts[e] < k), None)
        if y is None:
            raise StrategyError("asked to move in a finished game")
        holders = [l for l in range(config.colors) if y in self._vsets[l]]
        if not holders:
            raise InvariantViolation(f"unfinished element {y} has no reserve set")
        l = holders[0]
        self._shrink(y, 2, prefer=l)
        return Move(y, l)

    def _self_check(self, config, state, move) -> None:
        # Cheap always-on check on the elements this turn touched.
        for e in {move.element}:
            c = state.counts[e] + 1
            if self._w[e] + 2 * c != 2 * config.multiplicity:
                raise InvariantViolation(
                    f"element {e}: w={self._w[e]} c={c} breaks the parity invariant"
                )

    def invariant_report(self, config: GameConfig, state: GameState) -> list[str]:
        """Full check of conditions (1)-(3) against a position where it is
        Bob's turn right after this strategy moved."""
        problems = []
        k = config.multiplicity
        for i in range(config.colors):
            u = state.classes[i]
            v = self._vsets[i]
            if u & v:
                problems.append(f"class {i}: reserve overlaps colored set")
            if not config.matroids[i].is_independent(u | v):
                problems.append(f"class {i}: colored + reserve set is dependent")
        for e in range(config.n):
            if self._w[e] + 2 * state.counts[e] != 2 * k:
                problems.append(
                    f"element {e}: w={self._w[e]} c={state.counts[e]} != 2k"
                )
        return problems

    def debug_snapshot(self) -> dict:
        return {
            "strategy": self.name,
            "reserve_sets": [sorted(v) for v in self._vsets],
            "w": list(self._w),
        }


@dataclass(frozen=True)
class MkSpec:
    """The transversal matroid family with chromatic number k whose game
    needs 2k-1 colors, plus its canonical partition and block structure."""

    k: int
    matroid: TransversalMatroid
    canonical_partition: tuple[frozenset[int], ...]
    c_elements: frozenset[int]
    d_sets: tuple[frozenset[int], ...]

    @property
    def num_d_sets(self) -> int:
        return len(self.d_sets)

    def d_set(self, a: int) -> frozenset[int]:
        """1-based access to the a-th D block."""
        return self.d_sets[a - 1]


def build_mk(k: int) -> MkSpec:
    """Ground set C + D_1..D_{3k(2k-1)}; transversals of the D blocks and of
    2k-1 copies of the whole ground set."""
    if k < 3:
        raise ValueError("the construction needs k >= 3")
    width = 2 * k - 1
    num_d = 3 * k * width
    n_c = k * width
    n = n_c + num_d * k
    labels = []
    for i in range(1, k + 1):
        for j in range(1, width + 1):
            labels.append(f"c_{i}_{j}")
    for a in range(1, num_d + 1):
        for i in range(1, k + 1):
            labels.append(f"d_{i}_{a}")
    d_sets = []
    family: list[frozenset[int]] = []
    for a in range(num_d):
        start = n_c + a * k
        block = frozenset(range(start, start + k))
        d_sets.append(block)
        family.append(block)
    everything = frozenset(range(n))
    family.extend([everything] * width)
    matroid = TransversalMatroid(n, family, labels)
    partition = []
    for i in range(k):
        cls = set(range(i * width, (i + 1) * width))
        for a in range(num_d):
            cls.add(n_c + a * k + i)
        partition.append(frozenset(cls))
    return MkSpec(
        k=k,
        matroid=matroid,
        canonical_partition=tuple(partition),
        c_elements=frozenset(range(n_c)),
        d_sets=tuple(d_sets),
    )


class BobMkStrategy:
    """Bob's pairing strategy on build_mk(k) with h <= 2k-2 colors.

    Designated pairs start as (D_i, D_{i+h}); if the other side first uses
    color i inside the triple {D_i, D_{i+h}, D_{i+2h}}, the pair moves to
    the two untouched members. After every reply the count d_i of pair
    elements colored i stays at least c_i + eps_i - 1, with c_i the count of
    C elements colored i and eps_i the number of pair sets touched by i.
    """

    name = "bob-mk"

    def __init__(self, mk: MkSpec, colors: int):
        if colors > 2 * mk.k - 2:
            raise ValueError("the strategy is for at most 2k-2 colors")
        self.mk = mk
        self.h = colors
        self._pairs: list[tuple[int, int]] = [
            (i + 1, i + 1 + colors) for i in range(colors)
        ]
        self._used = [False] * colors
        self._redesignated = [False] * colors
        self._mirror: list[frozenset[int]] = [frozenset() for _ in range(colors)]
        self.flags: list[str] = []
        self._block_of = {}
        for a, block in enumerate(mk.d_sets, start=1):
            for e in block:
                self._block_of[e] = a

    def clone(self) -> "BobMkStrategy":
        c = type(self).__new__(type(self))
        c.mk = self.mk
        c.h = self.h
        c._pairs = list(self._pairs)
        c._used = list(self._used)
        c._redesignated = list(self._redesignated)
        c._mirror = list(self._mirror)
        c.flags = list(self.flags)
        c._block_of = self._block_of
        return c

    def _counters(self, state: GameState) -> tuple[list[int], list[int], list[int]]:
        d = [0] * self.h
        c = [0] * self.h
        eps = [0] * self.h
        for i in range(self.h):
            cls = state.classes[i]
            c[i] = len(cls & self.mk.c_elements)
            for a in self._pairs[i]:
                inside = len(cls & self.mk.d_set(a))
                d[i] += inside
                if inside:
                    eps[i] += 1
        return d, c, eps

    def _legal_candidates(self, config, state, blocks: Sequence[int], color: int):
        for a in blocks:
            for e in sorted(self.mk.d_set(a)):
                if state.counts[e] >= config.multiplicity:
                    continue
                if move_error(config, state, Move(e, color)) is None:
                    yield Move(e, color)

    def _packing_blocks(self, state, color: int) -> tuple[list[int], list[int]]:
        """Pair blocks split into (already holding the color, still clean).

        Packing colorings into blocks that already hold the color keeps
        eps_i as small as possible, which is what the counting bound needs.
        """
        cls = state.classes[color]
        holding = []
        clean = []
        for a in self._pairs[color]:
            if cls & self.mk.d_set(a):
                holding.append(a)
            else:
                clean.append(a)
        return holding, clean

    def next_move(self, config, state, rng) -> Move:
        delta = _move_delta(self._mirror, state)
        if len(delta) > 1:
            raise StrategyError("more than one opposing move since the last turn")
        move = None
        if delta:
            x, j = delta[0]
            block = self._block_of.get(x)
            if block is not None:
                move = self._reply_to_d_move(config, state, x, j, block)
            else:
                move = self._reply_to_c_move(config, state, j)
        if move is None:
            move = self._build_up(config, state)
        if move is None:
            moves = legal_moves(config, state)
            if not moves:
                raise StrategyError("no legal move available")
            move = moves[0]
        self._mirror = [
            cls | {move.element} if i == move.color else cls
            for i, cls in enumerate(state.classes)
        ]
        self._used[move.color] = True
        self._self_check(config, state, move)
        return move

    def _reply_to_d_move(self, config, state, x, j, block) -> Move | None:
        # Triple rule: the first touch of {D_i, D_{i+h}, D_{i+2h}} before
        # this side ever used color i moves the pair to the two untouched
        # members, wasting the probe, and anchors the color in the first.
        if block <= 3 * self.h:
            i = (block - 1) % self.h
            if not self._used[i] and not self._redesignated[i]:
                triple = (i + 1, i + 1 + self.h, i + 1 + 2 * self.h)
                fresh = tuple(a for a in triple if a != block)
                self._pairs[i] = fresh
                self._redesignated[i] = True
                for mv in self._legal_candidates(config, state, fresh, i):
                    return mv
                return None
        # Pair defense: answer a move inside a designated pair in kind, but
        # only into a block already holding the color; opening the clean
        # block for a mere space race would raise eps for nothing.
        for color in range(self.h):
            if block in self._pairs[color]:
                holding, _ = self._packing_blocks(state, color)
                for mv in self._legal_candidates(config, state, holding, color):
                    return mv
                return None
        return None

    def _reply_to_c_move(self, config, state, j) -> Move | None:
        holding, clean = self._packing_blocks(state, j)
        for mv in self._legal_candidates(config, state, holding + clean, j):
            return mv
        return None

    def _build_up(self, config, state) -> Move | None:
        d, _, eps = self._counters(state)
        for color in range(self.h):
            target = self.mk.k + (1 if eps[color] >= 2 else 0)
            if d[color] >= target:
                continue
            holding, clean = self._packing_blocks(state, color)
            for mv in self._legal_candidates(config, state, holding + clean, color):
                return mv
        return None

    def _self_check(self, config, state, move) -> None:
        after = GameState(
            tuple(
                cls | {move.element} if i == move.color else cls
                for i, cls in enumerate(state.classes)
            ),
            state.counts,
            state.mover,
        )
        d, c, eps = self._counters(after)
        for i in range(self.h):
            if d[i] < c[i] + eps[i] - 1:
                self.flags.append(
                    f"invariant broke for color {i}:"
                    f" d={d[i]} < c={c[i]} + eps={eps[i]} - 1"
                )

    def debug_snapshot(self) -> dict:
        return {
            "strategy": self.name,
            "pairs": [list(p) for p in self._pairs],
            "used": list(self._used),
        }

    def counters_snapshot(self, state: GameState) -> dict:
        d, c, eps = self._counters(state)
        return {"d": d, "c": c, "eps": eps}


def duplicate_covering(covering: CoveringFamily) -> list[frozenset[int]]:
    """Each covering set twice: an a-covering becomes a 2a-covering."""
    out = []
    for cls in covering.classes:
        out.append(cls)
        out.append(cls)
    return out


def alice_setup_chromatic(
    matroid: Matroid, first_player: Player = Player.BOB
) -> tuple[GameConfig, AliceCoveringStrategy]:
    """Game with 2*chi(M) colors and the doubled minimum partition."""
    chi, covering = chromatic_number(matroid)
    config = GameConfig.single(matroid, 2 * chi, 1, first_player=first_player)
    return config, AliceCoveringStrategy(config, duplicate_covering(covering))


def alice_setup_fractional(
    matroid: Matroid, first_player: Player = Player.BOB
) -> tuple[GameConfig, AliceCoveringStrategy]:
    """Fractional game: multiplicity a with 2b colors from an a-covering."""
    res = fractional_chromatic(matroid)
    a, b = res.cover_multiplicity, res.cover_size
    config = GameConfig.single(matroid, 2 * b, a, first_player=first_player)
    return config, AliceCoveringStrategy(config, duplicate_covering(res.covering))


def alice_setup_for_lists(
    matroid: Matroid,
    lists: Sequence[Iterable[int]],
    first_player: Player = Player.BOB,
) -> tuple[GameConfig, AliceCoveringStrategy, list[int]]:
    """List-restricted game from a 2-coloring of the lists.

    Returns the configuration (colors indexed 0..d-1), the ready strategy
    and the palette mapping color index -> original color id.
    """
    coloring = color_from_lists(matroid, lists, 2)
    if isinstance(coloring, ViolationCertificate):
        raise CoveringError(
            f"lists admit no 2-coloring; certificate {sorted(coloring.subset)}"
        )
    palette = sorted(coloring.colors | set().union(*map(frozenset, lists)))
    index = {c: i for i, c in enumerate(palette)}
    allowed = [frozenset(index[c] for c in ls) for ls in map(frozenset, lists)]
    config = GameConfig.single(
        matroid, len(palette), 1, allowed=allowed, first_player=first_player
    )
    vsets = [coloring.color_class(c) for c in palette]
    return config, AliceCoveringStrategy(config, vsets), palette


def make_strategy(
    name: str,
    config: GameConfig,
    mk: MkSpec | None = None,
    covering: Iterable[Iterable[int]] | None = None,
):
    """Build a strategy from its command-line name."""
    if name == "greedy":
        return GreedyStrategy()
    if name == "spiteful":
        return SpitefulStrategy()
    if name == "random" or name.startswith("random:"):
        seed = int(name.split(":", 1)[1]) if ":" in name else None
        return RandomStrategy(seed)
    if name == "alice-covering":
        if covering is not None:
            return AliceCoveringStrategy(config, covering)
        k = config.multiplicity
        result = w_covering(list(config.matroids), 2 * k, config.allowed)
        if isinstance(result, ViolationCertificate):
            raise CoveringError(
                f"no {2 * k}-covering exists; certificate {sorted(result.subset)}"
            )
        return AliceCoveringStrategy(config, result.classes)
    if name == "bob-mk":
        if mk is None:
            raise ValueError("bob-mk needs the construction parameters")
        return BobMkStrategy(mk, config.colors)
    if name == "exact":
        from .solver import ExactStrategy

        return ExactStrategy()
    raise ValueError(f"unknown strategy {name!r}")
