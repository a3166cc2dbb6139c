from fractions import Fraction

import pytest

from scpp.numeric import binom, binom_poly, gaussian_poly, qbin_neg1, qbin_poly_at, rising


@pytest.mark.parametrize(
    "n,k,expected",
    [(4, 2, 6), (5, -1, 0), (0, 0, 1), (5, 6, 0), (-1, 0, 0), (10, 3, 120)],
)
def test_binom_values(n, k, expected):
    assert binom(n, k) == expected


def test_binom_pascal_rule():
    for n in range(1, 21):
        for k in range(-1, n + 2):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)


@pytest.mark.parametrize("a,n,expected", [(3, 2, 12), (1, 4, 24), (7, 0, 1), (-2, 3, 0)])
def test_rising(a, n, expected):
    assert rising(a, n) == expected


def test_rising_rejects_negative_length():
    with pytest.raises(ValueError):
        rising(3, -1)


@pytest.mark.parametrize("n,k,expected", [(2, 1, 0), (4, 2, 2), (3, 1, 1), (5, 3, 2)])
def test_qbin_neg1_values(n, k, expected):
    assert qbin_neg1(n, k) == expected


def test_gaussian_poly_explicit():
    # [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    assert gaussian_poly(4, 2) == (1, 1, 2, 1, 1)
    assert gaussian_poly(2, 1) == (1, 1)
    assert gaussian_poly(3, 0) == (1,)


@pytest.mark.parametrize(
    "n,k,q,expected",
    [(2, 1, 1, 2), (2, 1, -1, 0), (4, 2, -1, 2), (3, 1, Fraction(1, 2), Fraction(7, 4))],
)
def test_qbin_poly_at_values(n, k, q, expected):
    assert qbin_poly_at(n, k, q) == expected


def test_qbin_neg1_matches_polynomial_oracle():
    for n in range(21):
        for k in range(n + 1):
            assert qbin_neg1(n, k) == qbin_poly_at(n, k, -1)


def test_qbin_poly_at_one_is_binomial():
    for n in range(21):
        for k in range(n + 1):
            assert qbin_poly_at(n, k, 1) == binom(n, k)


def test_qbin_neg1_symmetry():
    for n in range(21):
        for k in range(n + 1):
            assert qbin_neg1(n, k) == qbin_neg1(n, n - k)


def test_binom_poly_agrees_on_nonnegative_integers():
    for v in range(12):
        for r in range(-2, 14):
            assert binom_poly(v, r) == binom(v, r)


def test_binom_poly_negative_and_rational_arguments():
    assert binom_poly(-2, 3) == -4  # (-2)(-3)(-4)/6
    assert binom_poly(-1, 2) == 1
    assert binom_poly(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom_poly(5, -3) == 0
