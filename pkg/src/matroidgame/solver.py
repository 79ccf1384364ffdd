"""Exhaustive solving of tiny coloring games.

Win/loss search with memoization over canonical positions. Colors whose
matroids and list memberships coincide are interchangeable, so positions
are keyed by the sorted class multiset within each such group; the
canonicalization can be switched off to cross-check its soundness.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from .game import (
    GameConfig,
    GameState,
    GameStatus,
    Move,
    Player,
    StrategyError,
    apply_move,
    legal_moves,
    status,
)
from .matroids import Matroid


class SolverCapError(ValueError):
    """The instance exceeds the configured state-space guard."""


def _color_groups(config: GameConfig) -> list[tuple[int, ...]]:
    sig: dict[tuple, list[int]] = {}
    for i, m in enumerate(config.matroids):
        if config.allowed is None:
            members: frozenset[int] = frozenset(range(config.n))
        else:
            members = frozenset(e for e in range(config.n) if i in config.allowed[e])
        sig.setdefault((id(m), members), []).append(i)
    return [tuple(v) for v in sig.values()]


def _canonical_key(state: GameState, groups, canonicalize: bool):
    if not canonicalize:
        return (tuple(tuple(sorted(c)) for c in state.classes), state.mover)
    parts = []
    for group in groups:
        parts.append(tuple(sorted(tuple(sorted(state.classes[i])) for i in group)))
    return (tuple(parts), state.mover)


@dataclass
class SolveResult:
    winner: Player
    best_move: Move | None
    explored: int


def solve_exact(
    config: GameConfig,
    state: GameState | None = None,
    max_elements: int = 9,
    max_colors: int = 4,
    canonicalize: bool = True,
) -> SolveResult:
    """Winner under optimal play from the given position (initial if None)."""
    if config.n > max_elements:
        raise SolverCapError(f"{config.n} elements exceed the cap {max_elements}")
    if config.colors > max_colors:
        raise SolverCapError(f"{config.colors} colors exceed the cap {max_colors}")
    groups = _color_groups(config)
    memo: dict = {}
    explored = 0

    def search(st: GameState) -> Player:
        nonlocal explored
        verdict = status(config, st)
        if verdict is GameStatus.ALICE_WIN:
            return Player.ALICE
        if verdict is GameStatus.BOB_WIN:
            return Player.BOB
        key = _canonical_key(st, groups, canonicalize)
        hit = memo.get(key)
        if hit is not None:
            return hit
        explored += 1
        mover = st.mover
        result = mover.opponent
        for mv in legal_moves(config, st):
            if search(apply_move(config, st, mv, validate=False)) is mover:
                result = mover
                break
        memo[key] = result
        return result

    root = state if state is not None else GameState.initial(config)
    winner = search(root)
    best = None
    if status(config, root) is GameStatus.ONGOING:
        for mv in legal_moves(config, root):
            if search(apply_move(config, root, mv, validate=False)) is winner:
                best = mv
                break
    return SolveResult(winner, best, explored)


def game_chromatic_number(
    matroid: Matroid,
    multiplicity: int = 1,
    first_player: Player = Player.BOB,
    max_colors: int = 4,
    max_elements: int = 9,
    canonicalize: bool = True,
) -> int | None:
    """Least color count with which Alice wins, or None above the cap."""
    for d in range(1, max_colors + 1):
        config = GameConfig.single(
            matroid, d, multiplicity, first_player=first_player
        )
        result = solve_exact(
            config, max_elements=max_elements, max_colors=max_colors,
            canonicalize=canonicalize,
        )
        if result.winner is Player.ALICE:
            return d
    return None


class ExactStrategy:
    """Plays perfectly within the solver caps (both seats)."""

    name = "exact"

    def __init__(self, max_elements: int = 9, max_colors: int = 4):
        self.max_elements = max_elements
        self.max_colors = max_colors

    def next_move(self, config, state, rng) -> Move:
        moves = legal_moves(config, state)
        if not moves:
            raise StrategyError("no legal move available")
        me = state.mover
        for mv in moves:
            nxt = apply_move(config, state, mv, validate=False)
            if (
                solve_exact(
                    config, nxt, self.max_elements, self.max_colors
                ).winner
                is me
            ):
                return mv
        return moves[0]

    def clone(self) -> "ExactStrategy":
        return ExactStrategy(self.max_elements, self.max_colors)


def alice_wins_every_bob_line(
    config: GameConfig,
    alice,
    max_bob_plies: int | None = None,
) -> list[tuple[Player, Move]] | None:
    """Walk every Bob continuation against a fixed Alice strategy.

    Returns None when Alice wins every line, otherwise one losing move
    sequence. The Alice strategy must support clone() since its memory forks
    at each Bob branching point.
    """
    rng = random.Random(0)

    def walk(state: GameState, strat, line: list) -> list | None:
        verdict = status(config, state)
        if verdict is GameStatus.ALICE_WIN:
            return None
        if verdict is GameStatus.BOB_WIN:
            return list(line)
        if state.mover is Player.ALICE:
            mv = strat.next_move(config, state, rng)
            line.append((Player.ALICE, mv))
            out = walk(apply_move(config, state, mv), strat, line)
            line.pop()
            return out
        for mv in legal_moves(config, state):
            line.append((Player.BOB, mv))
            out = walk(apply_move(config, state, mv), strat.clone(), line)
            line.pop()
            if out is not None:
                return out
        return None

    return walk(GameState.initial(config), alice.clone(), [])
