import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings

from edgeres import Graph, complement, is_chordal
from edgeres.generate import random_chordal, random_graph

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def seeded_graphs(count, n_range, seed, p=0.5):
    """Deterministic stream of random graphs."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.choice(n_range)
        out.append(random_graph(n, seed * 10_000 + k, p))
    return out


def all_graphs(n):
    """Every labeled graph on n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


def formula_corpus():
    """Named graphs whose edge ideals have 2-linear resolutions."""
    from edgeres.generate import (
        complete_bipartite,
        complete_graph,
        empty_graph,
        path_graph,
    )

    candidates = [
        ("k2", complete_graph(2)),
        ("k3", complete_graph(3)),
        ("k4", complete_graph(4)),
        ("k5", complete_graph(5)),
        ("k6", complete_graph(6)),
        ("k11", complete_bipartite(1, 1)),
        ("k13", complete_bipartite(1, 3)),
        ("k22", complete_bipartite(2, 2)),
        ("k23", complete_bipartite(2, 3)),
        ("k33", complete_bipartite(3, 3)),
        ("p3", path_graph(3)),
        ("p4", path_graph(4)),
        ("edge3", Graph.from_edges(3, [(1, 3)])),
        ("empty4", empty_graph(4)),
    ]
    for k in range(24):
        h = random_chordal(5 + k % 5, seed=900 + k)
        candidates.append((f"cochordal{k}", complement(h)))
    corpus = [
        (name, g)
        for name, g in candidates
        if g.edges and is_chordal(complement(g))[0]
    ]
    assert len(corpus) >= 30
    return corpus


def chordal_corpus():
    """Named chordal graphs with at least one non-edge (so the complement
    ideal is nonzero)."""
    from edgeres.generate import complete_graph, empty_graph, path_graph

    candidates = [
        ("p3", path_graph(3)),
        ("p4", path_graph(4)),
        ("p5", path_graph(5)),
        ("p6", path_graph(6)),
        ("empty3", empty_graph(3)),
        ("empty5", empty_graph(5)),
        ("k4_minus_edge", Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])),
        ("k3_plus_point", Graph.from_edges(4, [(1, 2), (1, 3), (2, 3)])),
        ("star5", Graph.from_edges(5, [(1, v) for v in range(2, 6)])),
        ("two_triangles", Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])),
    ]
    for k in range(20):
        candidates.append((f"chordal{k}", random_chordal(4 + k % 7, seed=1700 + k)))
    corpus = []
    for name, g in candidates:
        chordal, _ = is_chordal(g)
        complete = len(g.edges) == g.n * (g.n - 1) // 2
        if chordal and not complete:
            corpus.append((name, g))
    assert len(corpus) >= 25
    return corpus


@pytest.fixture(scope="session")
def formula_graphs():
    return formula_corpus()


@pytest.fixture(scope="session")
def chordal_graphs():
    return chordal_corpus()
