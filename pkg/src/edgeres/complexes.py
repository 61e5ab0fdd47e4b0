"""Clique and independence complexes, f-vectors, induced subcomplexes.

Two f-vector paths exist on purpose: :func:`f_vector` counts the faces of
a materialized :class:`FaceComplex` (what the homology oracle needs),
while :func:`clique_fvector_direct` only counts cliques, which keeps the
closed-form pipeline usable beyond materialization scale.  Materialized
complexes are capped at ``DEFAULT_FACE_CAP`` faces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, UniformHypergraph, is_chordal
from .util import binom

DEFAULT_FACE_CAP = 1 << 22


class ComplexTooLargeError(ValueError):
    """Materializing the complex would exceed the configured face cap."""


@dataclass(frozen=True)
class FVector:
    """Face counts (f_-1, f_0, ..., f_{d-1}); counts[k] is f_{k-1}."""

    counts: tuple

    def __post_init__(self):
        c = self.counts
        if not c or c[0] != 1:
            raise ValueError("f_{-1} must be 1")
        if any(x < 0 for x in c):
            raise ValueError("face counts must be nonnegative")
        if len(c) > 1 and c[-1] == 0:
            raise ValueError("trailing zero entry; trim to the true dimension")
        f0 = c[1] if len(c) > 1 else 0
        for j, fj in enumerate(c[2:], start=1):
            if fj > binom(f0, j + 1):
                raise ValueError(f"f_{j} = {fj} exceeds C({f0}, {j + 1})")

    @property
    def dim(self) -> int:
        return len(self.counts) - 2

    def f(self, j: int) -> int:
        """f_j, with zeros outside the stored range."""
        k = j + 1
        if 0 <= k < len(self.counts):
            return self.counts[k]
        return 0

    def to_json(self) -> str:
        return json.dumps({"f": list(self.counts), "dim": self.dim})

    @classmethod
    def from_json(cls, text: str) -> "FVector":
        data = json.loads(text)
        fv = cls(tuple(int(x) for x in data["f"]))
        if fv.dim != data["dim"]:
            raise ValueError("dim field disagrees with face counts")
        return fv


@dataclass(frozen=True)
class FaceComplex:
    """Explicit simplicial complex: all faces as frozensets, downward closed."""

    n: int
    faces: frozenset  # of frozenset[int]

    def __post_init__(self):
        if frozenset() not in self.faces:
            raise ValueError("the empty face must be present")

    def validate_closure(self) -> None:
        """Full downward-closure check (desk scale)."""
        for face in self.faces:
            for v in face:
                if face - {v} not in self.faces:
                    raise ValueError(f"missing subface {set(face - {v})} of {set(face)}")

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> list:
        out = [f for f in self.faces if not any(f < g for g in self.faces)]
        return sorted(out, key=sorted)

    def sorted_faces(self) -> list:
        return sorted(self.faces, key=lambda f: (len(f), sorted(f)))


def clique_complex(g: Graph, cap: int = DEFAULT_FACE_CAP) -> FaceComplex:
    """All cliques of g, including the empty one."""
    faces = [frozenset()]
    layer = [(frozenset({v}), v) for v in g.vertices()]
    while layer:
        faces.extend(f for f, _ in layer)
        if len(faces) > cap:
            raise ComplexTooLargeError(f"more than {cap} faces")
        nxt = []
        for f, top in layer:
            for v in range(top + 1, g.n + 1):
                if f <= g.adj[v]:
                    nxt.append((f | {v}, v))
        layer = nxt
    return FaceComplex(g.n, frozenset(faces))


def independence_complex(
    h: UniformHypergraph, cap: int = DEFAULT_FACE_CAP
) -> FaceComplex:
    """All subsets of 1..n containing no edge of h."""
    # extensions by a new maximum vertex only ever complete edges whose
    # maximum is that vertex
    edges_by_max = {v: [] for v in range(1, h.n + 1)}
    for e in h.edges:
        edges_by_max[e[-1]].append(frozenset(e[:-1]))
    faces = [frozenset()]
    layer = [
        (frozenset({v}), v)
        for v in range(1, h.n + 1)
        if frozenset() not in edges_by_max[v]
    ]
    while layer:
        faces.extend(f for f, _ in layer)
        if len(faces) > cap:
            raise ComplexTooLargeError(f"more than {cap} faces")
        nxt = []
        for f, top in layer:
            for v in range(top + 1, h.n + 1):
                if not any(rest <= f for rest in edges_by_max[v]):
                    nxt.append((f | {v}, v))
        layer = nxt
    return FaceComplex(h.n, frozenset(faces))


def f_vector(c: FaceComplex) -> FVector:
    counts = [0] * (c.dim + 2)
    for face in c.faces:
        counts[len(face)] += 1
    return FVector(tuple(counts))


def clique_fvector_direct(g: Graph) -> FVector:
    """Count cliques by size without materializing the complex.

    For chordal graphs every clique is {v} together with a subset of v's
    later neighbourhood in a PEO, so the counts are sums of binomials.
    Otherwise falls back to an ordered extension recursion.
    """
    ok, eo = is_chordal(g)
    if ok:
        pos = {v: i for i, v in enumerate(eo.order)}
        later_deg = [
            sum(1 for w in g.adj[v] if pos[w] > pos[v]) for v in eo.order
        ]
        top = max(later_deg, default=-1) + 1
        counts = [1] + [0] * top
        for d in later_deg:
            for j in range(d + 1):
                counts[j + 1] += binom(d, j)
        return FVector(tuple(counts))

    counts = [1] + [0] * g.n
    order = list(g.vertices())

    def walk(cands, size):
        for idx, v in enumerate(cands):
            counts[size + 1] += 1
            walk([w for w in cands[idx + 1 :] if w in g.adj[v]], size + 1)

    walk(order, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return FVector(tuple(counts))


def induced_subcomplex(c: FaceComplex, w) -> FaceComplex:
    """Faces of c contained in w, re-indexed over sorted(w) -> 1..|w|."""
    wset = frozenset(w)
    if not wset <= frozenset(range(1, c.n + 1)):
        raise ValueError("w must be a subset of the vertex set")
    relabel = {v: i for i, v in enumerate(sorted(wset), start=1)}
    faces = frozenset(
        frozenset(relabel[v] for v in face) for face in c.faces if face <= wset
    )
    return FaceComplex(len(wset), faces)
