"""Shared exact-arithmetic conventions.

Every module goes through :func:`binom` so that the binomial convention is
fixed in exactly one place:

* ``binom(a, b) = 0`` whenever ``b < 0``;
* for ``a >= 0`` the usual binomial coefficient (which is 0 for ``a < b``);
* for ``a < 0`` the falling-factorial extension
  ``a(a-1)...(a-b+1)/b!`` (signed).  In particular ``binom(a, 0) = 1`` for
  every ``a``.  The identities evaluated here only ever multiply a
  negative-top binomial by a face count that is itself zero, so the choice
  is harmless there, but it must be consistent.
"""

from math import comb, factorial


def binom(a: int, b: int) -> int:
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    num = 1
    for t in range(b):
        num *= a - t
    return num // factorial(b)


def falling(a: int, j: int) -> int:
    """Falling factorial a(a-1)...(a-j+1); empty product for j = 0."""
    out = 1
    for t in range(j):
        out *= a - t
    return out


def graded_dim(n: int, s: int) -> int:
    """Dimension of the degree-s slice of a polynomial ring in n variables.

    Zero for s < 0; this is *not* the falling-factorial extension, because
    twisted free modules contribute nothing in degrees below their shift.
    """
    if s < 0:
        return 0
    if n == 0:
        return 1 if s == 0 else 0
    return comb(s + n - 1, n - 1)
