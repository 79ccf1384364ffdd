"""Game-session HTTP API consumed by the web client.

Sessions live in process memory; each serializes its own mutations behind a
lock. The engine replies synchronously inside the move request whenever it
is the machine's turn, so the client always sees a position where it is the
human's move (or the game is over).

Endpoints:
    POST /sessions                  {config, humanSide, engineStrategy}
    GET  /sessions/{id}
    POST /sessions/{id}/moves       {element, color} -> 422 with a reason on
                                    illegal input, state untouched
    GET  /sessions/{id}/legal
    GET  /sessions/{id}/debug       strategy internals for invariant panels
"""
from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .game import (
    GameConfig,
    GameState,
    GameStatus,
    Move,
    Player,
    apply_move,
    legal_moves,
    move_error,
    status,
)
from .serialize import config_from_json
from .solver import SolverCapError
from .strategies import build_mk, make_strategy


class NewSession(BaseModel):
    config: dict
    humanSide: str = "bob"
    engineStrategy: str = "greedy"
    seed: int | None = None


class MoveBody(BaseModel):
    element: int
    color: int


@dataclass
class SessionRecord:
    id: str
    config: GameConfig
    config_doc: dict
    state: GameState
    human: Player
    engine_name: str
    engine: object
    rng: random.Random
    moves: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _state_doc(session: SessionRecord) -> dict:
    st = session.state
    cfg = session.config
    labels = [cfg.matroids[0].ground.label(e) for e in range(cfg.n)]
    return {
        "classes": [sorted(c) for c in st.classes],
        "counts": list(st.counts),
        "mover": st.mover.value,
        "status": status(cfg, st).value,
        "labels": labels,
    }


def _session_doc(session: SessionRecord) -> dict:
    return {
        "id": session.id,
        "humanSide": session.human.value,
        "engineStrategy": session.engine_name,
        "colors": session.config.colors,
        "multiplicity": session.config.multiplicity,
        "lists": (
            None
            if session.config.allowed is None
            else [sorted(s) for s in session.config.allowed]
        ),
        "meta": session.config_doc.get("meta", {}),
        "state": _state_doc(session),
        "moves": [
            {"player": p.value, "element": m.element, "color": m.color}
            for p, m in session.moves
        ],
    }


def _engine_turns(session: SessionRecord) -> None:
    cfg = session.config
    while (
        status(cfg, session.state) is GameStatus.ONGOING
        and session.state.mover is not session.human
    ):
        mv = session.engine.next_move(cfg, session.state, session.rng)
        session.state = apply_move(cfg, session.state, mv)
        session.moves.append((session.human.opponent, mv))


def create_app() -> FastAPI:
    app = FastAPI(title="matroidgame sessions")
    sessions: dict[str, SessionRecord] = {}
    counter = itertools.count(1)
    registry_lock = threading.Lock()

    def get_session(session_id: str) -> SessionRecord:
        record = sessions.get(session_id)
        if record is None:
            raise HTTPException(status_code=404, detail={"reason": "unknown session"})
        return record

    @app.post("/sessions")
    def create_session(body: NewSession):
        try:
            config = config_from_json(body.config)
            config.require_loopless()
            human = Player(body.humanSide)
            mk = None
            meta = body.config.get("meta") or {}
            if "mk_k" in meta:
                mk = build_mk(int(meta["mk_k"]))
            engine = make_strategy(body.engineStrategy, config, mk=mk)
        except SolverCapError as exc:
            raise HTTPException(status_code=400, detail={"reason": str(exc)})
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail={"reason": str(exc)})
        if body.engineStrategy == "exact" and (config.n > 9 or config.colors > 4):
            raise HTTPException(
                status_code=400,
                detail={"reason": "exact strategy exceeds the solver caps"},
            )
        with registry_lock:
            session_id = f"s{next(counter)}"
            record = SessionRecord(
                id=session_id,
                config=config,
                config_doc=dict(body.config),
                state=GameState.initial(config),
                human=human,
                engine_name=body.engineStrategy,
                engine=engine,
                rng=random.Random(body.seed),
            )
            sessions[session_id] = record
        with record.lock:
            _engine_turns(record)
            return _session_doc(record)

    @app.get("/sessions/{session_id}")
    def fetch(session_id: str):
        record = get_session(session_id)
        with record.lock:
            return _session_doc(record)

    @app.get("/sessions/{session_id}/legal")
    def legal(session_id: str):
        record = get_session(session_id)
        with record.lock:
            return {
                "moves": [
                    {"element": m.element, "color": m.color}
                    for m in legal_moves(record.config, record.state)
                ]
            }

    @app.post("/sessions/{session_id}/moves")
    def submit(session_id: str, body: MoveBody):
        record = get_session(session_id)
        with record.lock:
            if status(record.config, record.state) is not GameStatus.ONGOING:
                raise HTTPException(status_code=422, detail={"reason": "finished"})
            if record.state.mover is not record.human:
                raise HTTPException(status_code=422, detail={"reason": "not your turn"})
            mv = Move(body.element, body.color)
            reason = move_error(record.config, record.state, mv)
            if reason is not None:
                raise HTTPException(status_code=422, detail={"reason": reason})
            record.state = apply_move(record.config, record.state, mv)
            record.moves.append((record.human, mv))
            _engine_turns(record)
            return _session_doc(record)

    @app.get("/sessions/{session_id}/debug")
    def debug(session_id: str):
        record = get_session(session_id)
        with record.lock:
            snapshot = {}
            engine = record.engine
            if hasattr(engine, "debug_snapshot"):
                snapshot = engine.debug_snapshot()
                if hasattr(engine, "counters_snapshot"):
                    snapshot["counters"] = engine.counters_snapshot(record.state)
            return {"engine": record.engine_name, "snapshot": snapshot}

    _mount_frontend(app)
    return app


def _mount_frontend(app: FastAPI) -> None:
    # serve the built web client when it exists next to the package checkout
    from pathlib import Path

    root = Path(__file__).resolve().parent.parent.parent / "frontend"
    if (root / "index.html").exists() and (root / "dist").exists():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=root, html=True), name="ui")
