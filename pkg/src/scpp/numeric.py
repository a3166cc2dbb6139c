"""Exact integer and rational combinatorics primitives.

Everything here is arbitrary precision: plain Python ints for counts and
``fractions.Fraction`` for the few places that need exact rationals.  No
floating point is used anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside 0 <= k <= n.

    The zero convention for out-of-range arguments is deliberate: matrix
    builders index freely outside the valid range and rely on those entries
    vanishing.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_poly(v, r: int):
    """Binomial coefficient as a polynomial in its top argument.

    Returns v(v-1)...(v-r+1) / r! for r >= 0 and 0 for r < 0.  Unlike
    :func:`binom` this stays meaningful for negative or rational ``v``, which
    the slice-interpolation experiment needs.  Agrees with ``binom`` on
    integers v >= 0.
    """
    if r < 0:
        return 0
    prod = 1
    for t in range(r):
        prod *= v - t
    if isinstance(prod, int):
        return prod // math.factorial(r)
    return prod / math.factorial(r)


def rising(a: int, n: int) -> int:
    """Rising factorial a(a+1)...(a+n-1); 1 when n == 0."""
    if n < 0:
        raise ValueError("rising factorial needs n >= 0")
    prod = 1
    for t in range(n):
        prod *= a + t
    return prod


def qbin_neg1(n: int, k: int) -> int:
    """Gaussian binomial coefficient evaluated at q = -1.

    Zero when n is even and k odd, otherwise C(floor(n/2), floor(k/2)).
    Out-of-range arguments give 0, matching :func:`binom`.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return binom(n // 2, k // 2)


@lru_cache(maxsize=None)
def gaussian_poly(n: int, k: int) -> tuple[int, ...]:
    """Coefficient tuple of the Gaussian polynomial [n choose k]_q.

    Built with the division-free recurrence
    gauss(n, k) = gauss(n-1, k-1) + q^k * gauss(n-1, k),
    so all intermediates are integer polynomials.
    """
    if k < 0 or n < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    left = gaussian_poly(n - 1, k - 1)
    right = gaussian_poly(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


def qbin_poly_at(n: int, k: int, q) -> Fraction:
    """Evaluate the Gaussian binomial [n choose k]_q exactly at rational q.

    Independent route to :func:`qbin_neg1` (at q = -1) and :func:`binom`
    (at q = 1): the polynomial is expanded first, then evaluated.
    """
    coeffs = gaussian_poly(n, k)
    q = Fraction(q)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc
