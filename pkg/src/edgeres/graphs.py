"""Graphs, uniform hypergraphs, chordality recognition and leaf orders.

Vertices are the integers ``1..n``.  All values are immutable, every
operation is a pure function of its inputs, so objects may be shared
freely across threads.

Chordality is decided by lexicographic BFS followed by verification of
the candidate elimination order.  Lex-BFS applied to a chordal graph
always produces a reversed perfect elimination order, so a failed
verification is a proof that no such order exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class ParseError(ValueError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotChordalError(ValueError):
    """Raised when an operation requires a chordal graph."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on the vertex set 1..n."""

    n: int
    edges: frozenset  # of (u, v) tuples with u < v

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"invalid edge ({u}, {v}) on 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            edges.add(_edge(u, v))
        return cls(n, frozenset(edges))

    @cached_property
    def adj(self) -> dict:
        nbr = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return {v: frozenset(ws) for v, ws in nbr.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class UniformHypergraph:
    """m-uniform hypergraph on 1..n; edges are sorted m-tuples."""

    n: int
    m: int
    edges: frozenset  # of sorted m-tuples

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"uniformity {self.m} must be positive")
        if self.edges and self.m > self.n:
            raise ValueError(f"uniformity {self.m} exceeds vertex count {self.n}")
        for e in self.edges:
            if len(set(e)) != self.m or tuple(sorted(e)) != e:
                raise ValueError(f"edge {e} is not a sorted {self.m}-set")
            if not all(1 <= v <= self.n for v in e):
                raise ValueError(f"edge {e} outside 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, m: int, edge_sets) -> "UniformHypergraph":
        edges = set()
        for e in edge_sets:
            t = tuple(sorted(set(e)))
            if len(t) != m:
                raise ValueError(f"edge {tuple(e)} does not have {m} distinct vertices")
            edges.add(t)
        return cls(n, m, frozenset(edges))

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def as_graph(self) -> Graph:
        if self.m != 2:
            raise ValueError("only 2-uniform hypergraphs are graphs")
        return Graph.from_edges(self.n, self.edges)


def graph_as_hypergraph(g: Graph) -> UniformHypergraph:
    return UniformHypergraph(g.n, 2, g.edges)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    missing = [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if (u, v) not in g.edges
    ]
    return Graph(g.n, frozenset(missing))


@dataclass(frozen=True)
class EliminationOrder:
    """A vertex order; valid as a PEO when every vertex's later
    neighbours form a clique."""

    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError("order is not a permutation of 1..n")


def lex_bfs(g: Graph) -> list:
    """Lexicographic BFS visit order; ties resolved to the smallest vertex."""
    labels = {v: [] for v in g.vertices()}
    unvisited = set(g.vertices())
    order = []
    for step in range(g.n):
        v = max(unvisited, key=lambda u: (labels[u], -u))
        unvisited.remove(v)
        order.append(v)
        for w in g.adj[v]:
            if w in unvisited:
                labels[w].append(g.n - step)
    return order


def is_perfect_elimination(g: Graph, order) -> bool:
    """Check the PEO property via the classic first-later-neighbour test.

    Accepts exactly the perfect elimination orders: if every vertex's
    remaining neighbours minus its earliest one are neighbours of that
    earliest one, induction from the end of the order shows each later
    neighbourhood is a clique.
    """
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = set(later) - {parent}
        if not rest <= g.adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> tuple:
    """Decide chordality; on success also return a PEO certificate."""
    order = tuple(reversed(lex_bfs(g)))
    if is_perfect_elimination(g, order):
        return True, EliminationOrder(order)
    return False, None


@dataclass(frozen=True)
class LeafOrder:
    """Facets (as sorted vertex tuples) listed so that each prefix's last
    facet is a leaf of the prefix complex."""

    facets: tuple


def verify_leaf_order(lo: LeafOrder) -> bool:
    """Independent check of the leaf-order property.

    For every prefix, the last facet F must have a branch: a facet D != F
    in the prefix with H & F <= D & F for every other facet H.  Facets
    must be pairwise incomparable under inclusion.
    """
    facets = [frozenset(f) for f in lo.facets]
    for a in range(len(facets)):
        for b in range(len(facets)):
            if a != b and facets[a] <= facets[b]:
                raise ValueError("facets must be pairwise incomparable")
    for i, f in enumerate(facets):
        if i == 0:
            continue
        prefix = facets[: i + 1]
        found = False
        for d in prefix:
            if d is f:
                continue
            if all(h is f or h is d or (h & f) <= (d & f) for h in prefix):
                found = True
                break
        if not found:
            return False
    return True


def _later_cliques(g: Graph, order) -> dict:
    pos = {v: i for i, v in enumerate(order)}
    return {
        v: frozenset({v} | {w for w in g.adj[v] if pos[w] > pos[v]})
        for v in order
    }


def maximal_cliques(g: Graph) -> list:
    """Maximal cliques of a chordal graph, from a PEO."""
    ok, eo = is_chordal(g)
    if not ok:
        raise NotChordalError("graph is not chordal")
    cand = _later_cliques(g, eo.order)
    sets = list(cand.values())
    out = [c for c in sets if not any(c < d for d in sets)]
    return sorted(set(out), key=sorted)


def leaf_order(g: Graph) -> LeafOrder:
    """Order the maximal cliques of a chordal graph into a leaf order.

    Cliques are emitted while scanning the PEO backwards: whenever the
    visited vertex is the earliest-eliminated member of a maximal clique,
    that clique is appended.  The resulting sequence has the running
    intersection property, hence every prefix's last facet is a leaf.
    """
    ok, eo = is_chordal(g)
    if not ok:
        raise NotChordalError("graph is not chordal")
    cand = _later_cliques(g, eo.order)
    sets = list(cand.values())
    facets = []
    for v in reversed(eo.order):
        c = cand[v]
        if not any(c < d for d in sets):
            facets.append(tuple(sorted(c)))
    return LeafOrder(tuple(facets))


# ---------------------------------------------------------------------------
# text format
#
# Graph files:       first line "n <count>", then one "u v" per line.
# Hypergraph files:  first line "n <count> m <uniformity>", then m labels
#                    per line.  Blank lines and "#" comments are ignored;
# labels need not be 1..n and are canonicalized to 1..k (numeric sort when
# every label is an integer, lexicographic otherwise).


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_header(tokens, lineno):
    if len(tokens) == 2 and tokens[0] == "n":
        try:
            n = int(tokens[1])
        except ValueError:
            raise ParseError(f"bad vertex count {tokens[1]!r}", lineno)
        return n, None
    if len(tokens) == 4 and tokens[0] == "n" and tokens[2] == "m":
        try:
            n, m = int(tokens[1]), int(tokens[3])
        except ValueError:
            raise ParseError("bad header counts", lineno)
        return n, m
    raise ParseError(
        "expected header 'n <count>' or 'n <count> m <uniformity>'", lineno
    )


def _canonicalize(raw_edges, n, first_seen):
    labels = sorted(first_seen)
    numeric = all(lab.lstrip("-").isdigit() for lab in labels)
    if numeric and all(1 <= int(lab) <= n for lab in labels):
        mapping = {lab: int(lab) for lab in labels}
    else:
        if numeric:
            labels.sort(key=int)
        if len(labels) > n:
            bad = labels[n]
            raise ParseError(
                f"{len(labels)} distinct labels exceed n={n}", first_seen[bad]
            )
        mapping = {lab: i for i, lab in enumerate(labels, start=1)}
    mapped = [(tuple(mapping[lab] for lab in edge), lineno) for edge, lineno in raw_edges]
    return mapped, mapping


def _parse_edges(text: str):
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input", 1)
    n, m = _parse_header(header.split(), lineno)
    arity = 2 if m is None else m
    raw_edges = []
    first_seen = {}
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != arity:
            raise ParseError(
                f"expected {arity} vertex labels, found {len(tokens)}", lineno
            )
        if len(set(tokens)) != arity:
            raise ParseError("repeated vertex in edge", lineno)
        for tok in tokens:
            first_seen.setdefault(tok, lineno)
        raw_edges.append((tuple(tokens), lineno))
    mapped, mapping = _canonicalize(raw_edges, n, first_seen)
    seen = {}
    edges = []
    for edge, lineno in mapped:
        key = tuple(sorted(edge))
        if key in seen:
            raise ParseError(f"duplicate edge (first at line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    identity = all(
        lab.lstrip("-").isdigit() and int(lab) == v for lab, v in mapping.items()
    )
    return n, m, edges, (None if identity else mapping)


def parse_graph(text: str):
    """Parse graph text; returns (Graph, label_map or None)."""
    n, m, edges, mapping = _parse_edges(text)
    if m is not None:
        raise ParseError("expected a graph header 'n <count>'", 1)
    return Graph.from_edges(n, edges), mapping


def parse_hypergraph(text: str):
    n, m, edges, mapping = _parse_edges(text)
    if m is None:
        raise ParseError("expected a hypergraph header 'n <count> m <uniformity>'", 1)
    return UniformHypergraph.from_edges(n, m, edges), mapping


def parse_input(text: str):
    """Parse either format, dispatching on the header shape."""
    n, m, edges, mapping = _parse_edges(text)
    if m is None:
        return Graph.from_edges(n, edges), mapping
    return UniformHypergraph.from_edges(n, m, edges), mapping


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def format_hypergraph(h: UniformHypergraph) -> str:
    lines = [f"n {h.n} m {h.m}"]
    lines += [" ".join(map(str, e)) for e in h.sorted_edges()]
    return "\n".join(lines) + "\n"
