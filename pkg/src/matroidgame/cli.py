"""Command-line entry points.

Matroids load from JSON, whitespace edge lists or DIMACS; game configs and
transcripts are JSON. Every command that simulates takes --seed and replays
deterministically.
"""
from __future__ import annotations

import csv
import io
import json

import click

from .game import GameConfig, Player, play, replay
from .listcolor import WColoring, check_condition3, color_from_lists, multiple_basis_exchange
from .serialize import (
    certificate_to_json,
    config_from_json,
    config_to_json,
    covering_to_json,
    load_matroid,
    transcript_from_json,
    transcript_to_json,
)
from .solver import game_chromatic_number, solve_exact
from .strategies import build_mk, duplicate_covering, make_strategy
from .union import (
    CoveringFamily,
    ViolationCertificate,
    chromatic_number,
    fractional_chromatic,
    w_covering,
)


@click.group()
def main() -> None:
    """Matroid coloring games and union algorithms."""


def _echo_json(doc) -> None:
    click.echo(json.dumps(doc, indent=2, sort_keys=True))


def _parse_weights(text: str, n: int):
    if text is None:
        return 1
    text = text.strip()
    if text.isdigit():
        return int(text)
    raw = json.loads(text)
    if isinstance(raw, list):
        return raw
    return {int(k): int(v) for k, v in raw.items()}


@main.command()
@click.argument("matroid_file", type=click.Path(exists=True))
def chromatic(matroid_file: str) -> None:
    """Minimum number of independent sets partitioning the ground set."""
    m = load_matroid(matroid_file)
    chi, covering = chromatic_number(m)
    _echo_json({"v": 1, "chromatic": chi, "partition": covering_to_json(covering)})


@main.command()
@click.argument("matroid_file", type=click.Path(exists=True))
def fractional(matroid_file: str) -> None:
    """Exact fractional chromatic number as a reduced fraction."""
    m = load_matroid(matroid_file)
    res = fractional_chromatic(m)
    _echo_json(
        {
            "v": 1,
            "fractional": str(res.value),
            "numerator": res.value.numerator,
            "denominator": res.value.denominator,
            "cover_multiplicity": res.cover_multiplicity,
            "cover_size": res.cover_size,
            "covering": covering_to_json(res.covering),
        }
    )


@main.command()
@click.option("--matroid", "-m", "matroid_files", multiple=True, required=True,
              type=click.Path(exists=True), help="One matroid per class; repeat.")
@click.option("--weights", "-w", default=None,
              help="Constant, JSON array, or JSON object element->demand.")
def cover(matroid_files, weights) -> None:
    """Cover each element e by exactly W(e) classes, or emit a certificate."""
    matroids = [load_matroid(f) for f in matroid_files]
    w = _parse_weights(weights, matroids[0].n) if weights else 1
    result = w_covering(matroids, w)
    if isinstance(result, CoveringFamily):
        _echo_json({"v": 1, "feasible": True, "covering": covering_to_json(result)})
    else:
        _echo_json({"v": 1, "feasible": False, "certificate": certificate_to_json(result)})


@main.command("list-check")
@click.argument("matroid_file", type=click.Path(exists=True))
@click.option("--sizes", required=True, help="JSON array of list sizes per element.")
@click.option("--weights", "-w", default="1")
def list_check(matroid_file, sizes, weights) -> None:
    """Colorability from every list assignment of the given sizes."""
    m = load_matroid(matroid_file)
    s = json.loads(sizes)
    w = _parse_weights(weights, m.n)
    ok, payload = check_condition3(m, s, w)
    doc = {"v": 1, "colorable": ok}
    if isinstance(payload, ViolationCertificate):
        doc["certificate"] = certificate_to_json(payload)
    _echo_json(doc)


@main.command("list-color")
@click.argument("matroid_file", type=click.Path(exists=True))
@click.option("--lists", required=True,
              help="JSON object element->array of color ids.")
@click.option("--weights", "-w", default="1")
def list_color(matroid_file, lists, weights) -> None:
    """Choose W(e) colors per element from its list, classes independent."""
    m = load_matroid(matroid_file)
    raw = json.loads(lists)
    ls = {int(k): v for k, v in raw.items()}
    w = _parse_weights(weights, m.n)
    result = color_from_lists(m, ls, w)
    if isinstance(result, WColoring):
        _echo_json(
            {
                "v": 1,
                "colorable": True,
                "chosen": [sorted(s) for s in result.chosen],
            }
        )
    else:
        _echo_json(
            {"v": 1, "colorable": False, "certificate": certificate_to_json(result)}
        )


@main.command("basis-exchange")
@click.argument("matroid_file", type=click.Path(exists=True))
@click.option("--b1", required=True, help="JSON array, first basis.")
@click.option("--b2", required=True, help="JSON array, second basis.")
@click.option("--a1", required=True, help="JSON array, subset of b1 to exchange.")
def basis_exchange(matroid_file, b1, b2, a1) -> None:
    """A2 in b2 with (b1-a1)+a2 and (b2-a2)+a1 both bases."""
    m = load_matroid(matroid_file)
    a2 = multiple_basis_exchange(
        m, json.loads(b1), json.loads(b2), json.loads(a1)
    )
    _echo_json({"v": 1, "a2": sorted(a2)})


def _strategies_for(config, alice_name, bob_name, meta):
    mk = None
    if meta and "mk_k" in meta:
        mk = build_mk(int(meta["mk_k"]))
    alice = make_strategy(alice_name, config, mk=mk)
    bob = make_strategy(bob_name, config, mk=mk)
    return alice, bob


def _load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if "type" in doc and "matroid" not in doc and "matroids" not in doc:
        doc = {"v": 1, "matroid": doc, "colors": 1}
    return config_from_json(doc), doc


def _apply_overrides(config, doc, first_player, colors, multiplicity):
    if first_player or colors or multiplicity:
        matroids = config.matroids
        if colors:
            if len(set(map(id, matroids))) != 1:
                raise click.UsageError("--colors needs a single-matroid config")
            matroids = (matroids[0],) * colors
            doc = dict(doc, colors=colors)
        config = GameConfig(
            matroids,
            multiplicity or config.multiplicity,
            config.allowed,
            Player(first_player) if first_player else config.first_player,
        )
        if multiplicity:
            doc = dict(doc, multiplicity=multiplicity)
        if first_player:
            doc = dict(doc, first_player=first_player)
    return config, doc


@main.command("play")
@click.argument("config_file", type=click.Path(exists=True))
@click.option("--alice", "alice_name", default="greedy")
@click.option("--bob", "bob_name", default="greedy")
@click.option("--seed", type=int, default=None)
@click.option("--first-player", type=click.Choice(["alice", "bob"]), default=None)
@click.option("--colors", type=int, default=None)
@click.option("--multiplicity", type=int, default=None)
@click.option("--out", type=click.Path(), default=None, help="Transcript file.")
def play_cmd(config_file, alice_name, bob_name, seed, first_player, colors,
             multiplicity, out) -> None:
    """Run one game and emit the transcript."""
    config, doc = _load_config(config_file)
    config, doc = _apply_overrides(config, doc, first_player, colors, multiplicity)
    alice, bob = _strategies_for(config, alice_name, bob_name, doc.get("meta"))
    transcript = play(config, alice, bob, seed=seed)
    payload = transcript_to_json(transcript, doc)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        click.echo(f"{transcript.outcome.value} in {len(transcript.moves)} plies -> {out}")
    else:
        _echo_json(payload)


def _tournament_game(args):
    doc, alice_name, bob_name, seed = args
    config = config_from_json(doc)
    alice, bob = _strategies_for(config, alice_name, bob_name, doc.get("meta"))
    t = play(config, alice, bob, seed=seed)
    return t.outcome.value, t.forfeited


@main.command()
@click.argument("config_file", type=click.Path(exists=True))
@click.option("--alice", "alice_name", default="greedy")
@click.option("--bob", "bob_name", default="greedy")
@click.option("-n", "games", type=int, default=10)
@click.option("--seed", type=int, default=0)
@click.option("--first-player", type=click.Choice(["alice", "bob"]), default=None)
@click.option("--colors", type=int, default=None)
@click.option("--multiplicity", type=int, default=None)
@click.option("--workers", type=int, default=1,
              help="Parallel worker processes for the games.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def tournament(config_file, alice_name, bob_name, games, seed, first_player,
               colors, multiplicity, workers, fmt) -> None:
    """Play many games and tabulate the win rates."""
    config, doc = _load_config(config_file)
    config, doc = _apply_overrides(config, doc, first_player, colors, multiplicity)
    jobs = [(doc, alice_name, bob_name, seed + g) for g in range(games)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_tournament_game, jobs))
    else:
        outcomes = [_tournament_game(job) for job in jobs]
    wins = {"alice": 0, "bob": 0}
    forfeits = 0
    for outcome, forfeited in outcomes:
        wins[outcome] += 1
        forfeits += forfeited
    rows = [
        {
            "alice": alice_name,
            "bob": bob_name,
            "games": games,
            "alice_wins": wins["alice"],
            "bob_wins": wins["bob"],
            "forfeits": forfeits,
        }
    ]
    if fmt == "json":
        _echo_json({"v": 1, "results": rows})
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
        click.echo(buf.getvalue().rstrip())


@main.command()
@click.argument("config_file", type=click.Path(exists=True))
@click.option("--game-chromatic", is_flag=True,
              help="Also search the least winning color count.")
@click.option("--first-player", type=click.Choice(["alice", "bob"]), default=None)
@click.option("--colors", type=int, default=None)
@click.option("--multiplicity", type=int, default=None)
@click.option("--max-elements", type=int, default=9)
@click.option("--max-colors", type=int, default=4)
def solve(config_file, game_chromatic, first_player, colors, multiplicity,
          max_elements, max_colors) -> None:
    """Exact winner with optimal play (small instances only)."""
    config, doc = _load_config(config_file)
    config, doc = _apply_overrides(config, doc, first_player, colors, multiplicity)
    result = solve_exact(config, max_elements=max_elements, max_colors=max_colors)
    out = {"v": 1, "winner": result.winner.value, "explored": result.explored}
    if result.best_move is not None:
        out["best_move"] = {
            "element": result.best_move.element,
            "color": result.best_move.color,
        }
    if game_chromatic:
        ms = config.matroids
        if len(set(map(id, ms))) != 1:
            raise click.UsageError("--game-chromatic needs a single-matroid config")
        out["game_chromatic"] = game_chromatic_number(
            ms[0],
            multiplicity=config.multiplicity,
            first_player=config.first_player,
            max_colors=max_colors,
            max_elements=max_elements,
        )
    _echo_json(out)


@main.command()
@click.argument("k", type=int)
@click.option("--colors", type=int, default=None,
              help="Color count for the emitted game config (default 2k-2).")
@click.option("--out", type=click.Path(), default=None)
def mk(k, colors, out) -> None:
    """Emit the lower-bound transversal matroid and its canonical covering."""
    built = build_mk(k)
    h = colors if colors is not None else 2 * k - 2
    config = GameConfig.single(built.matroid, h, 1)
    doc = config_to_json(config, meta={"mk_k": k})
    doc["canonical_partition"] = [sorted(c) for c in built.canonical_partition]
    doc["canonical_2covering"] = [
        sorted(c) for c in duplicate_covering(CoveringFamily(built.canonical_partition))
    ]
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh)
        click.echo(f"wrote {out} (n={built.matroid.n}, colors={h})")
    else:
        _echo_json(doc)


@main.command("replay")
@click.argument("transcript_file", type=click.Path(exists=True))
def replay_cmd(transcript_file) -> None:
    """Re-apply a transcript, verifying legality and the outcome."""
    with open(transcript_file, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    transcript, config = transcript_from_json(doc)
    if config is None:
        raise click.UsageError("transcript file carries no config")
    replay(config, transcript, verify=True)
    _echo_json(
        {
            "v": 1,
            "verified": True,
            "outcome": transcript.outcome.value,
            "plies": len(transcript.moves),
        }
    )


@main.command()
@click.option("--port", type=int, default=8000)
@click.option("--host", default="127.0.0.1")
def serve(port, host) -> None:
    """Run the game-session HTTP API."""
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
