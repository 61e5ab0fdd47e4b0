"""Deterministic graph-family generators for corpora and fixtures."""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import Graph, UniformHypergraph

CLIQUE_ENUM_CAP = 1 << 18


class BadParamsError(ValueError):
    pass


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("need n >= 1")
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def complete_bipartite(n: int, m: int) -> Graph:
    if n < 1 or m < 1:
        raise BadParamsError("need n, m >= 1")
    edges = [(u, n + v) for u in range(1, n + 1) for v in range(1, m + 1)]
    return Graph.from_edges(n + m, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("need n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParamsError("need n >= 3")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("need n >= 1")
    return Graph(n, frozenset())


def _all_cliques(g: Graph) -> list:
    """Every clique of g (including the empty one), in sorted order."""
    cliques = [()]
    layer = [((v,), v) for v in g.vertices()]
    while layer:
        cliques.extend(c for c, _ in layer)
        if len(cliques) > CLIQUE_ENUM_CAP:
            raise BadParamsError("graph too dense for clique enumeration")
        nxt = []
        for c, top in layer:
            for v in range(top + 1, g.n + 1):
                if all(w in g.adj[v] for w in c):
                    nxt.append((c + (v,), v))
        layer = nxt
    return sorted(cliques, key=lambda c: (len(c), c))


def random_chordal(n: int, seed: int) -> Graph:
    """Random chordal graph by incremental simplicial insertion.

    Each new vertex is attached to a clique of the current graph, chosen
    uniformly from all cliques (including the empty one) under the seeded
    generator.  The reverse insertion order is then a perfect elimination
    order, so the result is chordal by construction.
    """
    if n < 1:
        raise BadParamsError("need n >= 1")
    rng = random.Random(seed)
    edges = []
    current = empty_graph(1)
    for v in range(2, n + 1):
        base = rng.choice(_all_cliques(current))
        edges.extend((u, v) for u in base)
        current = Graph.from_edges(v, edges)
    return Graph.from_edges(n, edges)


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi style seeded graph (used for sampling corpora)."""
    rng = random.Random(seed)
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_uniform_hypergraph(
    n: int, m: int, seed: int, removals: int
) -> UniformHypergraph:
    """Complete m-uniform hypergraph with seeded random edges removed.

    Dense m-uniform hypergraphs are the natural hunting ground for
    m-linear resolutions; callers certify with the oracle before relying
    on linearity.
    """
    rng = random.Random(seed)
    edges = sorted(combinations(range(1, n + 1), m))
    removals = min(removals, len(edges))
    for _ in range(removals):
        edges.pop(rng.randrange(len(edges)))
    return UniformHypergraph.from_edges(n, m, edges)


FAMILIES = ("complete", "bipartite", "path", "cycle", "empty", "random-chordal")


def generate_family(family: str, n: int, m: int | None, seed: int | None):
    if family == "complete":
        return complete_graph(n)
    if family == "bipartite":
        if m is None:
            raise BadParamsError("bipartite needs both part sizes (--n and --m)")
        return complete_bipartite(n, m)
    if family == "path":
        return path_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "empty":
        return empty_graph(n)
    if family == "random-chordal":
        if seed is None:
            raise BadParamsError("random-chordal needs --seed")
        return random_chordal(n, seed)
    raise BadParamsError(f"unknown family {family!r}; choose from {FAMILIES}")
