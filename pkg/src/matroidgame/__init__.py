"""Matroid coloring games: union algorithms, list colorings, strategies."""

from .matroids import (
    AxiomWitness,
    ExplicitMatroid,
    GraphicMatroid,
    GroundSet,
    LoopError,
    Matroid,
    MatroidError,
    MinorView,
    TransversalMatroid,
    UniformMatroid,
    contract,
    restrict,
    validate_independence_family,
)
from .union import (
    CoveringError,
    CoveringFamily,
    FractionalResult,
    ViolationCertificate,
    brute_force_condition2,
    chromatic_number,
    fractional_chromatic,
    matroid_partition,
    w_covering,
)
from .listcolor import (
    WColoring,
    check_condition3,
    color_from_lists,
    condition3_bruteforce,
    graph_degree_lists,
    multiple_basis_exchange,
    partition_exchange_to_bases_of_a,
    partition_exchange_to_bases_of_b,
)
from .game import (
    GameConfig,
    GameState,
    GameStatus,
    IllegalMoveError,
    Move,
    Player,
    StrategyError,
    Transcript,
    apply_move,
    legal_moves,
    move_error,
    play,
    replay,
    status,
)
from .strategies import (
    AliceCoveringStrategy,
    BobMkStrategy,
    GreedyStrategy,
    InvariantViolation,
    MkSpec,
    RandomStrategy,
    SpitefulStrategy,
    alice_setup_chromatic,
    alice_setup_for_lists,
    alice_setup_fractional,
    build_mk,
    duplicate_covering,
    make_strategy,
)
from .solver import (
    ExactStrategy,
    SolveResult,
    SolverCapError,
    alice_wins_every_bob_line,
    game_chromatic_number,
    solve_exact,
)

__all__ = [name for name in dir() if not name.startswith("_")]
