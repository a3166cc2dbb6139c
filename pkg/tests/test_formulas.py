from itertools import permutations

import pytest

from scpp.formulas import (
    BoxDims,
    ParityCase,
    box_count,
    normalize_box,
    sc_count,
    signed_count_closed,
)
from scpp.pp import enumerate_pp, enumerate_sc


def test_box_dims_validation():
    with pytest.raises(ValueError):
        BoxDims(-1, 2, 2)
    assert BoxDims(0, 3, 5).volume == 0


@pytest.mark.parametrize(
    "dims,case,normalized",
    [
        ((2, 2, 2), ParityCase.EEE, (2, 2, 2)),
        ((2, 6, 4), ParityCase.EEE, (2, 4, 6)),
        ((3, 1, 2), ParityCase.EOO, (2, 1, 3)),
        ((5, 4, 2), ParityCase.OEE, (5, 2, 4)),
        ((4, 3, 6), ParityCase.OEE, (3, 4, 6)),
        ((1, 3, 5), ParityCase.OOO, (1, 3, 5)),
        ((0, 1, 1), ParityCase.EOO, (0, 1, 1)),
    ],
)
def test_normalize_box_cases(dims, case, normalized):
    n = normalize_box(dims)
    assert n.case is case
    assert n.sides == normalized
    assert n.b <= n.c
    assert (n.c - n.b) % 2 == 0


def test_normalize_box_permutation_roundtrip():
    for dims in [(3, 4, 6), (6, 4, 3), (1, 2, 2), (2, 1, 3), (5, 5, 5), (0, 2, 7)]:
        n = normalize_box(dims)
        assert tuple(n.sides[n.perm[k]] for k in range(3)) == dims


@pytest.mark.parametrize("dims,expected", [((1, 1, 1), 2), ((2, 2, 2), 20), ((3, 3, 3), 980)])
def test_box_count_values(dims, expected):
    assert box_count(*dims) == expected


def test_box_count_empty_box():
    for a in range(4):
        for b in range(4):
            assert box_count(a, b, 0) == 1


def test_box_count_matches_enumeration():
    for a in range(4):
        for b in range(4):
            for c in range(4):
                assert box_count(a, b, c) == sum(1 for _ in enumerate_pp((a, b, c)))


def test_box_count_symmetric():
    for a in range(7):
        for b in range(a, 7):
            for c in range(b, 7):
                vals = {box_count(*p) for p in permutations((a, b, c))}
                assert len(vals) == 1


@pytest.mark.parametrize("dims,expected", [((2, 2, 2), 4), ((2, 1, 3), 2), ((1, 1, 1), 0), ((1, 4, 4), 6)])
def test_sc_count_values(dims, expected):
    assert sc_count(*dims) == expected


def test_sc_count_matches_enumeration():
    for a in range(5):
        for b in range(5):
            for c in range(5):
                want = sum(1 for _ in enumerate_sc((a, b, c), budget=10**6))
                assert sc_count(a, b, c) == want, (a, b, c)


def test_sc_count_permutation_invariant():
    for a in range(6):
        for b in range(6):
            for c in range(6):
                vals = {sc_count(*p) for p in permutations((a, b, c))}
                assert len(vals) == 1


def test_sc_count_zero_iff_all_odd():
    for a in range(9):
        for b in range(9):
            for c in range(9):
                all_odd = a % 2 == b % 2 == c % 2 == 1
                assert (sc_count(a, b, c) == 0) == all_odd


@pytest.mark.parametrize(
    "dims,magnitude,zero",
    [((2, 2, 2), 2, False), ((2, 1, 3), 0, True), ((1, 4, 4), 2, False), ((3, 3, 3), 0, True)],
)
def test_signed_count_closed_values(dims, magnitude, zero):
    assert signed_count_closed(*dims) == (magnitude, zero)


def test_signed_count_closed_permutation_invariant():
    for a in range(7):
        for b in range(7):
            for c in range(7):
                vals = {signed_count_closed(*p) for p in permutations((a, b, c))}
                assert len(vals) == 1


def test_zero_flag_consistency():
    for a in range(13):
        for b in range(13):
            for c in range(13):
                mag, zero = signed_count_closed(a, b, c)
                assert zero == (mag == 0), (a, b, c)
