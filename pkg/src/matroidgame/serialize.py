"""JSON and text ingestion for matroids, game configs and transcripts.

Every JSON document carries a "v": 1 schema tag. Matroid documents:

    {"v": 1, "type": "uniform",     "n": 3, "r": 2}
    {"v": 1, "type": "graphic",     "vertices": 4, "edges": [[0,1], ...]}
    {"v": 1, "type": "transversal", "n": 5, "family": [[0,1], [2,3,4]]}
    {"v": 1, "type": "explicit",    "n": 2, "independent": [[], [0], [1]]}

all with an optional "labels" array. Graphic matroids also load from plain
whitespace edge lists ("u v" per line) and DIMACS ("p edge N M" / "e u v",
1-based). Game configs, coverings, colorings and transcripts follow the
shapes documented in the README; color indices are 0-based everywhere.
"""
from __future__ import annotations

import json
from typing import Any, Mapping

from .game import GameConfig, Move, Player, Transcript
from .matroids import (
    ExplicitMatroid,
    GraphicMatroid,
    Matroid,
    MinorView,
    TransversalMatroid,
    UniformMatroid,
)
from .union import CoveringFamily, ViolationCertificate


class FormatError(ValueError):
    """Malformed input document."""


def matroid_to_json(m: Matroid) -> dict:
    doc: dict[str, Any] = {"v": 1}
    if isinstance(m, UniformMatroid):
        doc.update(type="uniform", n=m.n, r=m.r)
    elif isinstance(m, GraphicMatroid):
        doc.update(
            type="graphic",
            vertices=m.num_vertices,
            edges=[list(e) for e in m.edges],
        )
    elif isinstance(m, TransversalMatroid):
        doc.update(
            type="transversal",
            n=m.n,
            family=[sorted(s) for s in m.family],
        )
    elif isinstance(m, ExplicitMatroid):
        doc.update(
            type="explicit",
            n=m.n,
            independent=sorted(
                (sorted(s) for s in m.independent_sets), key=lambda s: (len(s), s)
            ),
        )
    elif isinstance(m, MinorView):
        doc.update(
            type="minor",
            base=matroid_to_json(m.base),
            keep=list(m._to_base),
            contracted=sorted(m.contracted),
        )
    else:
        raise FormatError(f"cannot serialize matroid of type {type(m).__name__}")
    if m.ground.labels is not None:
        doc["labels"] = list(m.ground.labels)
    return doc


def matroid_from_json(doc: Mapping) -> Matroid:
    kind = doc.get("type")
    labels = doc.get("labels")
    if kind == "uniform":
        return UniformMatroid(int(doc["n"]), int(doc["r"]), labels)
    if kind == "graphic":
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
        return GraphicMatroid(int(doc["vertices"]), edges, labels)
    if kind == "transversal":
        family = [[int(e) for e in s] for s in doc["family"]]
        return TransversalMatroid(int(doc["n"]), family, labels)
    if kind == "explicit":
        sets = [[int(e) for e in s] for s in doc["independent"]]
        return ExplicitMatroid(int(doc["n"]), sets, labels)
    if kind == "minor":
        base = matroid_from_json(doc["base"])
        return MinorView(base, doc["keep"], frozenset(doc["contracted"]))
    raise FormatError(f"unknown matroid type {kind!r}")


def graphic_from_edge_list(text: str) -> GraphicMatroid:
    """Whitespace edge list: one "u v" pair per line, 0-based vertices."""
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if not edges:
        raise FormatError("no edges found")
    nv = max(max(u, v) for u, v in edges) + 1
    return GraphicMatroid(nv, edges)


def graphic_from_dimacs(text: str) -> GraphicMatroid:
    """DIMACS edge format: "p edge N M" then "e u v" lines, 1-based."""
    nv = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"bad problem line: {line!r}")
            nv = int(parts[2])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
    if nv is None:
        raise FormatError("missing DIMACS problem line")
    return GraphicMatroid(nv, edges)


def load_matroid(path: str) -> Matroid:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return matroid_from_json(json.loads(text))
    if stripped.startswith(("p ", "c ", "e ")) or "\np " in text:
        return graphic_from_dimacs(text)
    return graphic_from_edge_list(text)


def covering_to_json(covering: CoveringFamily) -> dict:
    return {"v": 1, "classes": [sorted(c) for c in covering.classes]}


def certificate_to_json(cert: ViolationCertificate) -> dict:
    return {
        "v": 1,
        "subset": sorted(cert.subset),
        "rank_sum": cert.rank_sum,
        "demand": cert.demand,
    }


def config_to_json(config: GameConfig, meta: Mapping | None = None) -> dict:
    doc: dict[str, Any] = {
        "v": 1,
        "multiplicity": config.multiplicity,
        "first_player": config.first_player.value,
    }
    ms = config.matroids
    if all(m is ms[0] for m in ms):
        doc["matroid"] = matroid_to_json(ms[0])
        doc["colors"] = len(ms)
    else:
        doc["matroids"] = [matroid_to_json(m) for m in ms]
    if config.allowed is not None:
        doc["lists"] = {str(e): sorted(s) for e, s in enumerate(config.allowed)}
    if meta:
        doc["meta"] = dict(meta)
    return doc


def config_from_json(doc: Mapping) -> GameConfig:
    first = Player(doc.get("first_player", "bob"))
    k = int(doc.get("multiplicity", 1))
    if "matroids" in doc:
        matroids = tuple(matroid_from_json(d) for d in doc["matroids"])
    elif "matroid" in doc:
        m = matroid_from_json(doc["matroid"])
        matroids = (m,) * int(doc.get("colors", 1))
    else:
        raise FormatError("config needs a matroid or a matroids array")
    allowed = None
    if "lists" in doc:
        n = matroids[0].n
        raw = doc["lists"]
        allowed = tuple(
            frozenset(int(c) for c in raw.get(str(e), ())) for e in range(n)
        )
    return GameConfig(matroids, k, allowed, first)


def transcript_to_json(transcript: Transcript, config_doc: Mapping | None = None) -> dict:
    doc: dict[str, Any] = {
        "v": 1,
        "moves": [
            {"player": p.value, "element": mv.element, "color": mv.color}
            for p, mv in transcript.moves
        ],
        "outcome": transcript.outcome.value,
    }
    if transcript.forfeited:
        doc["forfeit_by"] = transcript.forfeit_by.value
        doc["forfeit_reason"] = transcript.forfeit_reason
    if transcript.flags:
        doc["flags"] = list(transcript.flags)
    if transcript.snapshots is not None:
        doc["snapshots"] = transcript.snapshots
    if config_doc is not None:
        doc["config"] = dict(config_doc)
    return doc


def transcript_from_json(doc: Mapping) -> tuple[Transcript, GameConfig | None]:
    moves = [
        (Player(m["player"]), Move(int(m["element"]), int(m["color"])))
        for m in doc["moves"]
    ]
    forfeit_by = Player(doc["forfeit_by"]) if "forfeit_by" in doc else None
    transcript = Transcript(
        moves=moves,
        outcome=Player(doc["outcome"]),
        forfeit_by=forfeit_by,
        forfeit_reason=doc.get("forfeit_reason"),
        flags=list(doc.get("flags", ())),
    )
    config = config_from_json(doc["config"]) if "config" in doc else None
    return transcript, config
