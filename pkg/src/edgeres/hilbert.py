"""Hilbert functions, Hilbert series in rational form, and multiplicity.

The series of a Stanley-Reisner ring is assembled from the f-vector via
H(z) = sum_j f_{j-1} z^j / (1-z)^j and reduced by exact division by
(1-z) until the numerator no longer vanishes at 1.  The reduced
denominator exponent is the Krull dimension and P(1) the multiplicity.

Two independent Hilbert-function routes are provided: the face-count
formula h(t) = sum_j f_j C(t-1, j) and the alternating-sum over a pure
resolution.  Their agreement is one of the package's primary
verification targets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .betti import BettiVector, LengthMismatchError, PureResolutionType
from .complexes import FVector
from .util import binom, graded_dim


class ZeroPolynomialError(ValueError):
    pass


class ZeroDimensionalModuleError(ValueError):
    """Multiplicity is reported only for Krull dimension >= 1."""


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coeffs[k] is the degree-k coefficient,
    trailing zeros trimmed (the zero polynomial has no coefficients)."""

    coeffs: tuple

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient")

    @classmethod
    def of(cls, coeffs) -> "IntPolynomial":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of(
            k * c for k, c in enumerate(self.coeffs) if k >= 1
        )

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial.of(
            x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial.of(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial.of(c * x for x in self.coeffs)


ONE_MINUS_Z = IntPolynomial((1, -1))


def divide_by_one_minus_z(p: IntPolynomial) -> IntPolynomial:
    """Exact quotient p / (1-z); requires p(1) = 0."""
    if p(1) != 0:
        raise ValueError("not divisible by (1-z)")
    q = []
    acc = 0
    for c in p.coeffs[:-1] if p.coeffs else []:
        acc += c
        q.append(acc)
    return IntPolynomial.of(q)


@dataclass(frozen=True)
class HilbertSeries:
    """Rational form P(z) / (1-z)^d with P(1) != 0 unless P = 0."""

    numerator: IntPolynomial
    denom_exponent: int

    def __post_init__(self):
        if self.denom_exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        if not self.numerator.is_zero and self.numerator(1) == 0:
            raise ValueError("numerator must not vanish at 1 (reduce first)")

    def coefficient(self, t: int) -> int:
        """Coefficient of z^t in the power-series expansion."""
        return sum(
            c * graded_dim(self.denom_exponent, t - k)
            for k, c in enumerate(self.numerator.coeffs)
        )

    def to_jsonable(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator.coeffs],
            "denom_exponent": self.denom_exponent,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable())

    @classmethod
    def from_json(cls, text: str) -> "HilbertSeries":
        data = json.loads(text)
        return cls(
            IntPolynomial.of(int(c) for c in data["numerator"]),
            int(data["denom_exponent"]),
        )


def hilbert_function_from_fvector(f: FVector, t: int) -> int:
    """h(t) = sum_j f_j C(t-1, j) for t >= 1, and h(0) = 1."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        return 1
    return sum(f.f(j) * binom(t - 1, j) for j in range(f.dim + 1))


def hilbert_function_from_resolution(
    res: PureResolutionType, betti: BettiVector, n: int, t: int
) -> int:
    """Hilbert function of the quotient R/I from a pure resolution of the
    ideal: the ambient ring's count minus the alternating resolution
    contributions, each shift d contributing dim R_{t-d}."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if len(betti.betti) != len(res.shifts):
        raise LengthMismatchError(
            f"{len(betti.betti)} Betti numbers vs {len(res.shifts)} shifts"
        )
    total = graded_dim(n, t)
    for i, (b, d) in enumerate(zip(betti.betti, res.shifts)):
        total += (-1) ** (i + 1) * b * graded_dim(n, t - d)
    return total


def hilbert_series_from_fvector(f: FVector) -> HilbertSeries:
    """Reduced rational form of sum_j f_{j-1} z^j / (1-z)^j.

    Over the common denominator (1-z)^d the numerator evaluates to the
    top face count at z = 1, so for a genuine f-vector the form is
    already reduced; the division loop is kept for the general contract.
    """
    d = f.dim + 1
    power = [IntPolynomial((1,))]
    for _ in range(d):
        power.append(power[-1] * ONE_MINUS_Z)
    num = IntPolynomial(())
    for j in range(d + 1):
        term = power[d - j].scale(f.f(j - 1))
        num = num + IntPolynomial.of([0] * j + list(term.coeffs))
    while not num.is_zero and num(1) == 0:
        num = divide_by_one_minus_z(num)
        d -= 1
    return HilbertSeries(num, d)


def multiplicity_from_series(hs: HilbertSeries) -> int:
    """e = P(1) for a reduced series of positive dimension."""
    if hs.denom_exponent == 0:
        raise ZeroDimensionalModuleError(
            "zero-dimensional module: multiplicity not reported"
        )
    return hs.numerator(1)


def divisibility_order(k: IntPolynomial) -> int:
    """Largest m with (1-z)^m dividing k, via derivatives at 1."""
    if k.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    order = 0
    current = k
    while current(1) == 0:
        order += 1
        current = current.derivative()
    return order
