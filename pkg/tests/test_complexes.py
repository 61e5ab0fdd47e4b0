from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgeres import (
    ComplexTooLargeError,
    FaceComplex,
    FVector,
    Graph,
    UniformHypergraph,
    clique_complex,
    clique_fvector_direct,
    complement,
    f_vector,
    graph_as_hypergraph,
    independence_complex,
    induced_subcomplex,
)
from edgeres.generate import complete_bipartite, complete_graph, empty_graph, path_graph

from conftest import seeded_graphs


def powerset(verts):
    for r in range(len(verts) + 1):
        yield from map(frozenset, combinations(verts, r))


def brute_cliques(g):
    return frozenset(
        s for s in powerset(range(1, g.n + 1))
        if all(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))
    )


def brute_independent(h):
    return frozenset(
        s for s in powerset(range(1, h.n + 1))
        if not any(set(e) <= s for e in h.edges)
    )


# --- clique complex ----------------------------------------------------

def test_clique_complex_k3():
    c = clique_complex(complete_graph(3))
    assert len(c.faces) == 8


def test_clique_complex_c4_has_no_triangle():
    c = clique_complex(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]))
    assert len(c.faces) == 9
    assert c.dim == 1


def test_clique_complex_matches_bruteforce():
    for g in seeded_graphs(30, range(1, 11), seed=21):
        assert clique_complex(g).faces == brute_cliques(g)


def test_clique_complex_cap():
    with pytest.raises(ComplexTooLargeError):
        clique_complex(complete_graph(10), cap=100)


# --- independence complex ----------------------------------------------

def test_independence_complex_k22_is_two_disjoint_segments():
    c = independence_complex(graph_as_hypergraph(complete_bipartite(2, 2)))
    assert f_vector(c).counts == (1, 4, 2)


def test_independence_complex_no_edges_is_full_simplex():
    h = UniformHypergraph(4, 2, frozenset())
    c = independence_complex(h)
    assert len(c.faces) == 16
    assert f_vector(c).counts == (1, 4, 6, 4, 1)


def test_independence_complex_matches_bruteforce_3uniform():
    import random

    rng = random.Random(22)
    for _ in range(15):
        n = rng.randint(3, 9)
        pool = list(combinations(range(1, n + 1), 3))
        edges = rng.sample(pool, min(len(pool), rng.randint(0, 12)))
        h = UniformHypergraph.from_edges(n, 3, edges)
        assert independence_complex(h).faces == brute_independent(h)


def test_independence_equals_complement_cliques():
    for g in seeded_graphs(30, range(1, 10), seed=23):
        lhs = f_vector(independence_complex(graph_as_hypergraph(g)))
        rhs = f_vector(clique_complex(complement(g)))
        assert lhs == rhs


# --- f-vectors ---------------------------------------------------------

def test_f_vector_full_simplex():
    assert f_vector(clique_complex(complete_graph(4))).counts == (1, 4, 6, 4, 1)


def test_f_vector_bipartite_independence():
    for n, m in [(2, 2), (3, 2), (4, 4)]:
        f = f_vector(independence_complex(graph_as_hypergraph(complete_bipartite(n, m))))
        for i in range(f.dim + 1):
            assert f.f(i) == comb(n, i + 1) + comb(m, i + 1)


def test_f_vector_path_clique_complex():
    assert f_vector(clique_complex(path_graph(3))).counts == (1, 3, 2)


def test_face_total_is_power_of_two_for_simplex():
    for n in range(1, 8):
        assert sum(f_vector(clique_complex(complete_graph(n))).counts) == 2**n


def test_downward_closure_after_constructors():
    for g in seeded_graphs(10, range(1, 9), seed=24):
        clique_complex(g).validate_closure()
        independence_complex(graph_as_hypergraph(g)).validate_closure()


def test_dim_plus_one_is_max_independent_set():
    for g in seeded_graphs(20, range(2, 10), seed=25):
        c = independence_complex(graph_as_hypergraph(g))
        best = max(
            (len(s) for s in brute_independent(graph_as_hypergraph(g))), default=0
        )
        assert c.dim + 1 == best


# --- direct clique counting --------------------------------------------

def test_direct_fvector_complete_graph():
    f = clique_fvector_direct(complete_graph(12))
    for j in range(f.dim + 1):
        assert f.f(j) == comb(12, j + 1)


def test_direct_fvector_empty_graph():
    assert clique_fvector_direct(empty_graph(5)).counts == (1, 5)


def test_direct_fvector_matches_materialized():
    for g in seeded_graphs(40, range(1, 11), seed=26):
        assert clique_fvector_direct(g) == f_vector(clique_complex(g))


def test_direct_fvector_on_nonchordal():
    c5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert clique_fvector_direct(c5).counts == (1, 5, 5)


# --- induced subcomplexes ----------------------------------------------

def test_induced_on_empty_set():
    c = clique_complex(complete_graph(3))
    sub = induced_subcomplex(c, set())
    assert sub.faces == frozenset({frozenset()})


def test_induced_on_everything_is_identity():
    c = clique_complex(path_graph(4))
    assert induced_subcomplex(c, {1, 2, 3, 4}) == c


def test_induced_matches_bruteforce_filter():
    import random

    rng = random.Random(27)
    for g in seeded_graphs(20, range(1, 9), seed=27):
        c = independence_complex(graph_as_hypergraph(g))
        w = {v for v in range(1, g.n + 1) if rng.random() < 0.5}
        relabel = {v: i for i, v in enumerate(sorted(w), start=1)}
        expected = frozenset(
            frozenset(relabel[v] for v in face) for face in c.faces if face <= w
        )
        assert induced_subcomplex(c, w).faces == expected


def test_induced_rejects_bad_vertices():
    c = clique_complex(path_graph(3))
    with pytest.raises(ValueError):
        induced_subcomplex(c, {1, 7})


# --- FVector type ------------------------------------------------------

def test_fvector_requires_leading_one():
    with pytest.raises(ValueError):
        FVector((2, 3))


def test_fvector_bounds_entries():
    with pytest.raises(ValueError):
        FVector((1, 3, 4))  # 4 > C(3, 2)


def test_fvector_json_roundtrip():
    f = FVector((1, 4, 2))
    assert FVector.from_json(f.to_json()) == f
    assert f.to_json() == '{"f": [1, 4, 2], "dim": 1}'


@given(st.integers(1, 8))
def test_fvector_of_simplex(n):
    f = clique_fvector_direct(complete_graph(n))
    assert f.dim == n - 1
    assert f.f(-1) == 1


def test_face_complex_requires_empty_face():
    with pytest.raises(ValueError):
        FaceComplex(2, frozenset({frozenset({1})}))
