"""Ready-made and randomly generated matroid instances.

Used by the experiment scripts and the randomized test batteries. Random
instances come from families that are matroids by construction (uniform,
graphic, transversal) plus explicit materializations of those.
"""
from __future__ import annotations

import itertools
import random
from typing import Sequence

from .matroids import (
    ExplicitMatroid,
    GraphicMatroid,
    Matroid,
    TransversalMatroid,
    UniformMatroid,
    enumerate_independent_sets,
)


def uniform(n: int, r: int) -> UniformMatroid:
    return UniformMatroid(n, r)


def free(n: int) -> UniformMatroid:
    """Everything independent."""
    return UniformMatroid(n, max(n, 1))


def triangle() -> GraphicMatroid:
    return GraphicMatroid(3, [(0, 1), (1, 2), (2, 0)])


def k4() -> GraphicMatroid:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return GraphicMatroid(4, edges)


def path_graph(edges: int) -> GraphicMatroid:
    return GraphicMatroid(edges + 1, [(i, i + 1) for i in range(edges)])


def doubled_tree(tree_edges: Sequence[tuple[int, int]]) -> GraphicMatroid:
    """Every tree edge twice: the smallest graphs with two disjoint
    spanning trees."""
    nv = max(max(u, v) for u, v in tree_edges) + 1
    return GraphicMatroid(nv, list(tree_edges) + list(tree_edges))


def explicit_from(matroid: Matroid) -> ExplicitMatroid:
    if matroid.n > 14:
        raise ValueError("explicit materialization is for small grounds")
    labels = None
    if matroid.ground.labels is not None:
        labels = matroid.ground.labels
    return ExplicitMatroid(matroid.n, enumerate_independent_sets(matroid), labels)


def random_uniform(rng: random.Random, max_elements: int = 20) -> UniformMatroid:
    n = rng.randint(1, max_elements)
    r = rng.randint(max(1, (n + 3) // 4), n)
    return UniformMatroid(n, r)


def random_graphic(rng: random.Random, max_elements: int = 20) -> GraphicMatroid:
    m = rng.randint(1, max_elements)
    nv = rng.randint(2, max(2, m))
    edges = []
    for _ in range(m):
        u = rng.randrange(nv)
        v = rng.randrange(nv - 1)
        if v >= u:
            v += 1
        edges.append((u, v))
    return GraphicMatroid(nv, edges)


def random_transversal(
    rng: random.Random, max_elements: int = 20
) -> TransversalMatroid:
    n = rng.randint(1, max_elements)
    slots = rng.randint(max(1, n // 3), n)
    family = [set() for _ in range(slots)]
    for e in range(n):
        for s in rng.sample(range(slots), rng.randint(1, min(3, slots))):
            family[s].add(e)
    return TransversalMatroid(n, family)


def random_matroid(
    rng: random.Random,
    max_elements: int = 20,
    kinds: Sequence[str] = ("uniform", "graphic", "transversal"),
    explicit: bool = False,
) -> Matroid:
    kind = rng.choice(list(kinds))
    if kind == "uniform":
        m: Matroid = random_uniform(rng, max_elements)
    elif kind == "graphic":
        m = random_graphic(rng, max_elements)
    else:
        m = random_transversal(rng, max_elements)
    if explicit:
        return explicit_from(m)
    return m


def connected_graphs(max_edges: int = 8) -> list[tuple[int, list[tuple[int, int]]]]:
    """Every connected simple graph with 1..max_edges edges, up to
    isomorphism (max_edges <= 8).

    The atlas covers up to 7 vertices; connected graphs on 8 or 9 vertices
    with that few edges are exactly the trees and the unicyclic graphs,
    generated separately (unicyclic ones may repeat, which only re-tests).
    """
    if max_edges > 8:
        raise ValueError("the catalog construction assumes at most 8 edges")
    import networkx as nx

    out: list[tuple[int, list[tuple[int, int]]]] = []

    def add(graph) -> None:
        nodes = sorted(graph.nodes())
        relabel = {v: i for i, v in enumerate(nodes)}
        edges = sorted(
            (min(relabel[u], relabel[v]), max(relabel[u], relabel[v]))
            for u, v in graph.edges()
        )
        out.append((len(nodes), edges))

    for g in nx.graph_atlas_g()[1:]:
        m = g.number_of_edges()
        if 1 <= m <= max_edges and nx.is_connected(g):
            add(g)
    for nodes in (8, 9):
        if nodes - 1 > max_edges:
            continue
        for tree in nx.nonisomorphic_trees(nodes):
            add(tree)
    if max_edges >= 8:
        for tree in nx.nonisomorphic_trees(8):
            for u, v in itertools.combinations(range(8), 2):
                if not tree.has_edge(u, v):
                    g = tree.copy()
                    g.add_edge(u, v)
                    add(g)
    return out


def spanning_trees(nv: int, edges: Sequence[tuple[int, int]]) -> list[frozenset[int]]:
    m = GraphicMatroid(nv, list(edges))
    if m.full_rank != nv - 1:
        return []
    return [
        frozenset(combo)
        for combo in itertools.combinations(range(len(edges)), nv - 1)
        if m.is_independent(combo)
    ]


def disjoint_spanning_tree_pairs(
    nv: int, edges: Sequence[tuple[int, int]]
) -> list[tuple[frozenset[int], frozenset[int]]]:
    trees = spanning_trees(nv, edges)
    return [
        (t1, t2)
        for t1 in trees
        for t2 in trees
        if not (t1 & t2)
    ]
