"""The alternating matroid coloring game.

Two players color elements of a shared ground set; the set colored i must
stay independent in matroid i, each element collects up to `multiplicity`
distinct colors, and optional per-element color lists restrict what anyone
may play. Alice wins when every element holds its full quota of colors; Bob
wins when the position admits no move before that happens.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Protocol, Sequence

from .matroids import LoopError, Matroid, MatroidError


class Player(enum.Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def opponent(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class GameStatus(enum.Enum):
    ONGOING = "ongoing"
    ALICE_WIN = "alice"
    BOB_WIN = "bob"


class IllegalMoveError(ValueError):
    """Move rejected; `reason` is one of list/repeat/capacity/dependence/range."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"illegal move ({reason}){': ' + detail if detail else ''}")


class StrategyError(RuntimeError):
    """A strategy was used outside its contract."""


@dataclass(frozen=True)
class Move:
    element: int
    color: int


@dataclass(frozen=True)
class GameConfig:
    """Immutable rules of one game.

    Color i is played against matroids[i]; `allowed` optionally restricts
    each element to a subset of colors (the list-restricted game).
    """

    matroids: tuple[Matroid, ...]
    multiplicity: int = 1
    allowed: tuple[frozenset[int], ...] | None = None
    first_player: Player = Player.BOB

    def __post_init__(self) -> None:
        if not self.matroids:
            raise ValueError("need at least one color")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        n = self.matroids[0].n
        for m in self.matroids:
            if m.n != n:
                raise MatroidError("matroids must share the ground set")
        d = len(self.matroids)
        if self.allowed is not None:
            if len(self.allowed) != n:
                raise ValueError("allowed-color vector length mismatch")
            for e, s in enumerate(self.allowed):
                if not all(0 <= i < d for i in s):
                    raise ValueError(f"allowed colors of element {e} out of range")

    @classmethod
    def single(
        cls,
        matroid: Matroid,
        colors: int,
        multiplicity: int = 1,
        allowed: Sequence[Iterable[int]] | None = None,
        first_player: Player = Player.BOB,
    ) -> "GameConfig":
        """The usual game: one matroid, `colors` identical color slots."""
        al = None
        if allowed is not None:
            al = tuple(frozenset(s) for s in allowed)
        return cls((matroid,) * colors, multiplicity, al, first_player)

    @property
    def n(self) -> int:
        return self.matroids[0].n

    @property
    def colors(self) -> int:
        return len(self.matroids)

    def require_loopless(self) -> None:
        for i, m in enumerate(self.matroids):
            loops = m.loops()
            if loops:
                raise LoopError(f"matroid of color {i} has loops: {loops}")


class GameState:
    """Position: per-color colored sets, per-element color counts, mover."""

    __slots__ = ("classes", "counts", "mover", "_cache")

    def __init__(
        self,
        classes: tuple[frozenset[int], ...],
        counts: tuple[int, ...],
        mover: Player,
    ):
        self.classes = classes
        self.counts = counts
        self.mover = mover
        self._cache: dict = {}

    @classmethod
    def initial(cls, config: GameConfig) -> "GameState":
        return cls(
            tuple(frozenset() for _ in config.matroids),
            (0,) * config.n,
            config.first_player,
        )

    def acquired(self, e: int) -> frozenset[int]:
        return frozenset(i for i, cls in enumerate(self.classes) if e in cls)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}:{sorted(c)}" for i, c in enumerate(self.classes) if c)
        return f"GameState({body or 'empty'}, mover={self.mover.value})"


def state_checkers(config: GameConfig, state: GameState):
    """Per-color incremental independence checkers, cached on the state."""
    checkers = state._cache.get("checkers")
    if checkers is None:
        checkers = []
        for m, cls in zip(config.matroids, state.classes):
            inc = m.incremental()
            for e in sorted(cls):
                inc.add(e)
            checkers.append(inc)
        state._cache["checkers"] = checkers
    return checkers


def move_error(config: GameConfig, state: GameState, move: Move) -> str | None:
    """Reason the move is illegal, or None when it is fine."""
    e, i = move.element, move.color
    if not (0 <= e < config.n) or not (0 <= i < config.colors):
        return "range"
    if config.allowed is not None and i not in config.allowed[e]:
        return "list"
    if e in state.classes[i]:
        return "repeat"
    if state.counts[e] >= config.multiplicity:
        return "capacity"
    if not state_checkers(config, state)[i].can_add(e):
        return "dependence"
    return None


def legal_moves(config: GameConfig, state: GameState) -> tuple[Move, ...]:
    """All legal moves in element-major, color-minor order."""
    cached = state._cache.get("legal")
    if cached is not None:
        return cached
    checkers = state_checkers(config, state)
    k = config.multiplicity
    out = []
    for e in range(config.n):
        if state.counts[e] >= k:
            continue
        opts = config.allowed[e] if config.allowed is not None else None
        for i in range(config.colors):
            if opts is not None and i not in opts:
                continue
            if e in state.classes[i]:
                continue
            if checkers[i].can_add(e):
                out.append(Move(e, i))
    cached = tuple(out)
    state._cache["legal"] = cached
    return cached


def apply_move(
    config: GameConfig, state: GameState, move: Move, validate: bool = True
) -> GameState:
    if validate:
        reason = move_error(config, state, move)
        if reason is not None:
            raise IllegalMoveError(reason, f"element {move.element} color {move.color}")
    e, i = move.element, move.color
    classes = tuple(
        cls | {e} if j == i else cls for j, cls in enumerate(state.classes)
    )
    counts = tuple(
        c + 1 if j == e else c for j, c in enumerate(state.counts)
    )
    return GameState(classes, counts, state.mover.opponent)


def status(config: GameConfig, state: GameState) -> GameStatus:
    if all(c == config.multiplicity for c in state.counts):
        return GameStatus.ALICE_WIN
    if not legal_moves(config, state):
        return GameStatus.BOB_WIN
    return GameStatus.ONGOING


class Strategy(Protocol):
    name: str

    def next_move(
        self, config: GameConfig, state: GameState, rng: random.Random
    ) -> Move: ...


@dataclass
class Transcript:
    """Ordered moves with attribution and the final outcome.

    `snapshots`, when recorded, holds one strategy-internals dict per ply
    (or None for strategies that expose nothing).
    """

    moves: list[tuple[Player, Move]]
    outcome: Player
    forfeit_by: Player | None = None
    forfeit_reason: str | None = None
    flags: list[str] = field(default_factory=list)
    snapshots: list[dict | None] | None = None

    @property
    def forfeited(self) -> bool:
        return self.forfeit_by is not None


def play(
    config: GameConfig,
    alice: Strategy,
    bob: Strategy,
    seed: int | None = None,
    after_move: Callable | None = None,
    max_plies: int | None = None,
    record_snapshots: bool = False,
) -> Transcript:
    """Run one game to completion.

    Strategies receive (config, state, rng) each turn; an illegal move or a
    StrategyError forfeits the game for its author, recorded distinctly from
    a rules loss. `after_move` is an instrumentation hook called with
    (config, state_after, player, move, strategy).
    """
    rng = random.Random(seed)
    state = GameState.initial(config)
    moves: list[tuple[Player, Move]] = []
    snapshots: list[dict | None] | None = [] if record_snapshots else None
    outcome: Player | None = None
    forfeit_by = None
    forfeit_reason = None
    cap = max_plies if max_plies is not None else config.n * config.colors + 1
    while True:
        st = status(config, state)
        if st is GameStatus.ALICE_WIN:
            outcome = Player.ALICE
            break
        if st is GameStatus.BOB_WIN:
            outcome = Player.BOB
            break
        if len(moves) >= cap:
            raise RuntimeError("game exceeded the ply cap without terminating")
        player = state.mover
        strat = alice if player is Player.ALICE else bob
        try:
            mv = strat.next_move(config, state, rng)
            state = apply_move(config, state, mv)
        except (IllegalMoveError, StrategyError) as exc:
            outcome = player.opponent
            forfeit_by = player
            forfeit_reason = str(exc)
            break
        moves.append((player, mv))
        if snapshots is not None:
            taker = getattr(strat, "debug_snapshot", None)
            snapshots.append(taker() if taker else None)
        if after_move is not None:
            after_move(config, state, player, mv, strat)
    flags: list[str] = []
    for s in (alice, bob):
        flags.extend(getattr(s, "flags", ()))
    return Transcript(moves, outcome, forfeit_by, forfeit_reason, flags, snapshots)


def replay(
    config: GameConfig, transcript: Transcript, verify: bool = True
) -> GameState:
    """Re-apply a transcript from the initial state.

    With verify on, every color class is re-checked against its oracle after
    each move and the final status must reproduce the recorded outcome
    (unless the game ended by forfeit).
    """
    state = GameState.initial(config)
    for player, mv in transcript.moves:
        if player is not state.mover:
            raise ValueError("transcript moves out of turn")
        state = apply_move(config, state, mv)
        if verify:
            for m, cls in zip(config.matroids, state.classes):
                if not m.is_independent(cls):
                    raise AssertionError("replay reached a dependent color class")
    if verify and not transcript.forfeited:
        end = status(config, state)
        if end.value != transcript.outcome.value:
            raise AssertionError(
                f"replayed outcome {end.value} != recorded {transcript.outcome.value}"
            )
    return state
