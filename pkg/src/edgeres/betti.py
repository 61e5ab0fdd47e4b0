"""Closed-form Betti numbers for ideals with linear resolution, plus the
verification machinery built on top of them.

Everything here is exact integer (or rational) arithmetic.  The central
formula expresses the i-th total Betti number of an edge ideal with
m-linear resolution through the f-vector of its independence complex:

    beta_i = sum_{j=1}^{i+1} (-1)^j f_{j+m-2} C(f_0-(j+1), i-j+1)
             + C(i+m-1, m-1) C(f_0, i+m)

The m = 2 clique-complex identities, the pure-resolution alternating-sum
equations, and the multiplicity formulas are all downstream consumers of
this expression.  Formulas are evaluated exactly as stated; whenever an
independent route exists (Hilbert series, homology oracle) the caller is
expected to compare, never to patch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .complexes import FVector
from .util import binom, falling


class BadUniformityError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


class ZeroIdealError(ValueError):
    """The complex is a full simplex: zero ideal, no resolution data."""


@dataclass(frozen=True)
class BettiVector:
    """Total Betti numbers beta_0..beta_g of an ideal generated in degree m."""

    betti: tuple
    m: int

    def __post_init__(self):
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti numbers must be nonnegative")
        if self.betti and self.betti[-1] == 0:
            raise ValueError("trailing zero Betti number; trim to g")

    @property
    def g(self) -> int:
        return len(self.betti) - 1

    def module_sequence(self) -> tuple:
        """Betti numbers of the quotient module: rank-1 generator first."""
        return (1,) + self.betti


@dataclass(frozen=True)
class PureResolutionType:
    """Strictly increasing shifts d_0 < ... < d_p of a pure resolution."""

    shifts: tuple

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.shifts, self.shifts[1:])):
            raise ValueError("shifts must strictly increase")

    @property
    def p(self) -> int:
        return len(self.shifts) - 1

    def is_linear(self) -> bool:
        return all(d == self.shifts[0] + i for i, d in enumerate(self.shifts))

    @classmethod
    def linear(cls, d0: int, p: int) -> "PureResolutionType":
        return cls(tuple(d0 + i for i in range(p + 1)))

    @classmethod
    def quotient_linear(cls, m: int, p: int) -> "PureResolutionType":
        """Shifts (0, m, m+1, ..., m+p-1) of R/I for an m-linear ideal."""
        return cls((0,) + tuple(m + i for i in range(p)))


@dataclass(frozen=True)
class EquationCheck:
    label: str
    value: int
    target: int

    @property
    def passed(self) -> bool:
        return self.value == self.target


@dataclass(frozen=True)
class InequalityCheck:
    label: str
    slack: int

    @property
    def passed(self) -> bool:
        return self.slack >= 0


@dataclass(frozen=True)
class VerificationReport:
    """Exact residuals and slacks; informational entries do not affect
    the overall verdict."""

    residuals: tuple = ()
    inequality_slacks: tuple = ()
    informational: tuple = ()
    all_pass: bool = True

    @classmethod
    def build(cls, residuals=(), inequality_slacks=(), informational=()):
        ok = all(r.passed for r in residuals) and all(
            s.passed for s in inequality_slacks
        )
        return cls(tuple(residuals), tuple(inequality_slacks), tuple(informational), ok)

    def to_jsonable(self) -> dict:
        return {
            "residuals": [
                {"label": r.label, "value": str(r.value), "target": str(r.target)}
                for r in self.residuals
            ],
            "inequality_slacks": [
                {"label": s.label, "slack": str(s.slack)}
                for s in self.inequality_slacks
            ],
            "informational": [
                {"label": s.label, "slack": str(s.slack)}
                for s in self.informational
            ],
            "all_pass": self.all_pass,
        }


def betti_linear_uniform(f: FVector, m: int, i: int) -> int:
    """Total Betti number beta_i of an m-uniform edge ideal with m-linear
    resolution, from the f-vector of its independence complex.

    Vanishes for i beyond the projective dimension.  The identity is
    verified against the homology oracle for m >= 2; degree-1 generators
    (m = 1) fall outside it and are reported as-evaluated.
    """
    f0 = f.f(0)
    if m < 1 or m > f0:
        raise BadUniformityError(f"uniformity {m} outside 1..{f0}")
    if i < 0:
        raise ValueError("index must be nonnegative")
    total = sum(
        (-1) ** j * f.f(j + m - 2) * binom(f0 - (j + 1), i - j + 1)
        for j in range(1, i + 2)
    )
    return total + binom(i + m - 1, m - 1) * binom(f0, i + m)


def betti_linear_graph(f: FVector, i: int) -> int:
    """m = 2 specialization: beta_i from the independence-complex f-vector."""
    f0 = f.f(0)
    if f0 < 2:
        raise BadUniformityError("need at least 2 vertices for a graph ideal")
    if i < 0:
        raise ValueError("index must be nonnegative")
    total = sum(
        (-1) ** j * f.f(j) * binom(f0 - (j + 1), i - j + 1) for j in range(1, i + 2)
    )
    return total + (i + 1) * binom(f0, i + 2)


def betti_vector(f: FVector, m: int) -> BettiVector:
    """All nonzero beta_i, scanned up to the ambient bound."""
    values = [betti_linear_uniform(f, m, i) for i in range(f.f(0) + 1)]
    while values and values[-1] == 0:
        values.pop()
    return BettiVector(tuple(values), m)


def projective_dimension(f: FVector, m: int) -> int:
    """pdim of the quotient module R/I: one more than the last nonzero
    beta index of the ideal."""
    bv = betti_vector(f, m)
    if not bv.betti:
        raise ZeroIdealError("full simplex: zero ideal has projective dimension 0")
    return bv.g + 1


def herzog_kuhl_residuals(
    res: PureResolutionType, betti_with_module_term, n: int, d: int
) -> VerificationReport:
    """Alternating-sum equations satisfied by any pure resolution of a
    module of dimension d over n variables.

    Checks sum (-1)^i b_i = 0 (label eq11), the falling-factorial moments
    sum (-1)^i b_i d_i(d_i-1)...(d_i-j+1) = 0 for j = 1..n-d-1 (eq12),
    and the plain power moments sum (-1)^i b_i d_i^j (betti4).
    """
    b = tuple(betti_with_module_term)
    if len(b) != len(res.shifts):
        raise LengthMismatchError(
            f"{len(b)} Betti numbers vs {len(res.shifts)} shifts"
        )
    if n - d - 1 < 0:
        raise ValueError("need dim M + 1 <= n")
    checks = [
        EquationCheck(
            "eq11", sum((-1) ** i * bi for i, bi in enumerate(b)), 0
        )
    ]
    for j in range(1, n - d):
        checks.append(
            EquationCheck(
                f"eq12:j={j}",
                sum(
                    (-1) ** i * bi * falling(di, j)
                    for i, (bi, di) in enumerate(zip(b, res.shifts))
                ),
                0,
            )
        )
    for j in range(n - d):
        checks.append(
            EquationCheck(
                f"betti4:j={j}",
                sum(
                    (-1) ** i * bi * di**j
                    for i, (bi, di) in enumerate(zip(b, res.shifts))
                ),
                0,
            )
        )
    return VerificationReport.build(residuals=checks)


def chordal_equation_residuals(f: FVector, p: int) -> VerificationReport:
    """Equation system satisfied by the f-vector of the clique complex of
    a chordal graph.

    f is the clique-complex f-vector; p is the projective dimension of
    the quotient by the complement's edge ideal.  eq1 targets 1 (the
    statement-side sign) and eq2 targets 0 for j = 1..n-d-1, where n is
    the vertex count and d = dim(complex) + 1.
    """
    f0 = f.f(0)
    n, d = f0, f.dim + 1
    eq1 = -sum((-1) ** i * i * binom(f0, i + 1) for i in range(1, p + 2)) + sum(
        (-1) ** (j + p) * f.f(j) * binom(f0 - j - 2, p - j + 1)
        for j in range(1, p + 2)
    )
    checks = [EquationCheck("eq1", eq1, 1)]
    for j in range(1, n - d):
        lhs = sum(
            (-1) ** k
            * f.f(k)
            * sum(
                (-1) ** i * (2 + i) ** j * binom(f0 - k - 1, i - k + 1)
                for i in range(k - 1, p + 1)
            )
            for k in range(1, p + 2)
        ) + sum(
            (-1) ** i * (2 + i) ** j * (i + 1) * binom(f0, i + 2)
            for i in range(p + 1)
        )
        checks.append(EquationCheck(f"eq2:j={j}", lhs, 0))
    return VerificationReport.build(residuals=checks)


def chordal_inequality_slacks(f: FVector, p: int) -> VerificationReport:
    """Lower bounds C(p, i) on the Betti numbers of the pure resolution
    attached to a chordal graph's clique complex.

    The bound applies to the resolution of the quotient module, so the
    verified sequence is (1, beta_0, ..., beta_{p-1}) (module-indexed).
    The literal ideal-indexed reading beta_i >= C(p, i) is also computed
    but reported as informational only: it already fails on the path with
    three vertices.
    """
    module = [1] + [betti_linear_graph(f, i - 1) for i in range(1, p + 1)]
    slacks = [
        InequalityCheck(f"eq4:i={i}", module[i] - binom(p, i)) for i in range(p + 1)
    ]
    literal = [
        InequalityCheck(
            f"eq4-literal:i={i}", betti_linear_graph(f, i) - binom(p, i)
        )
        for i in range(p + 1)
    ]
    return VerificationReport.build(inequality_slacks=slacks, informational=literal)


def multiplicity_pure(
    res: PureResolutionType, betti_with_module_term, n: int, d: int
) -> Fraction:
    """Multiplicity of a module with a pure resolution, evaluated exactly
    as the closed formula states it:

        e = (-1)^m (p!/m!) sum_i (-1)^i b_i C(d_i, p),   m = n - d.

    The binomial uses the projective dimension p, which zeroes every term
    with d_i < p; callers must cross-check against the Hilbert-series
    value rather than trust this unconditionally.
    """
    b = tuple(betti_with_module_term)
    if len(b) != len(res.shifts):
        raise LengthMismatchError(
            f"{len(b)} Betti numbers vs {len(res.shifts)} shifts"
        )
    p = res.p
    m = n - d
    total = sum(
        (-1) ** i * bi * binom(di, p) for i, (bi, di) in enumerate(zip(b, res.shifts))
    )
    return Fraction((-1) ** m * factorial(p), factorial(m)) * total


def multiplicity_pure_codim(
    res: PureResolutionType, betti_with_module_term, n: int, d: int
) -> Fraction:
    """Variant of :func:`multiplicity_pure` with the codimension in the
    binomial:

        e = (-1)^m sum_i (-1)^i b_i C(d_i, m),   m = n - d.

    This is what differentiating (1-z)^m P(z) m times actually yields; it
    coincides with the stated formula when p = m (the Cohen-Macaulay
    case) and with the series value everywhere it has been tested.
    """
    b = tuple(betti_with_module_term)
    if len(b) != len(res.shifts):
        raise LengthMismatchError(
            f"{len(b)} Betti numbers vs {len(res.shifts)} shifts"
        )
    m = n - d
    total = sum(
        (-1) ** i * bi * binom(di, m) for i, (bi, di) in enumerate(zip(b, res.shifts))
    )
    return Fraction((-1) ** m * total)


def multiplicity_chordal(f: FVector, p: int, n: int) -> Fraction:
    """Multiplicity formula for the quotient by the complement's edge
    ideal of a chordal graph, evaluated exactly as displayed:

        e = (-1)^m (p!/m!) sum_{i=0}^p (-1)^i beta_i C(i+2, p)

    with beta_i the ideal Betti numbers from the clique-complex f-vector
    and m = n - d.  Reported alongside the series oracle, never asserted.
    """
    if n != f.f(0):
        raise ValueError("n must equal the number of vertices f_0")
    d = f.dim + 1
    m = n - d
    total = sum(
        (-1) ** i * betti_linear_graph(f, i) * binom(i + 2, p) for i in range(p + 1)
    )
    return Fraction((-1) ** m * factorial(p), factorial(m)) * total


def betti_complete_graph(n: int, i: int) -> int:
    """Reference value (i+1) C(n, i+2) for the complete graph."""
    if n < 2:
        raise ValueError("need n >= 2")
    if i < 0:
        raise ValueError("index must be nonnegative")
    return (i + 1) * binom(n, i + 2)


def betti_complete_bipartite(n: int, m: int, i: int) -> int:
    """Reference double sum over C(n, j) C(m, l) with j + l = i + 2."""
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    if i < 0:
        raise ValueError("index must be nonnegative")
    return sum(
        binom(n, j) * binom(m, i + 2 - j)
        for j in range(1, i + 2)
        if i + 2 - j >= 1
    )
