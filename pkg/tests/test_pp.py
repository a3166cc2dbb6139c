import xml.etree.ElementTree as ET

import pytest

from scpp.errors import BudgetExceededError
from scpp.formulas import BoxDims, signed_count_closed
from scpp.pp import (
    HeightMatrix,
    enumerate_pp,
    enumerate_sc,
    is_self_complementary,
    reference_pp,
    render_svg,
    sign_of,
    signed_count_pp,
)


def hm(dims, rows):
    return HeightMatrix(BoxDims(*dims), tuple(tuple(r) for r in rows))


def test_height_matrix_validation():
    with pytest.raises(ValueError):
        hm((2, 2, 2), [[0, 1], [0, 0]])  # increases along a row
    with pytest.raises(ValueError):
        hm((2, 2, 2), [[1, 1], [2, 1]])  # increases down a column
    with pytest.raises(ValueError):
        hm((1, 1, 2), [[3]])  # exceeds box height
    with pytest.raises(ValueError):
        hm((2, 1, 1), [[1]])  # wrong shape


def test_enumerate_pp_smallest():
    got = [p.rows for p in enumerate_pp((1, 1, 1))]
    assert got == [((0,),), ((1,),)]


def test_enumerate_pp_zero_side():
    assert sum(1 for _ in enumerate_pp((0, 5, 5))) == 1
    assert sum(1 for _ in enumerate_pp((3, 0, 9))) == 1


def test_enumerate_pp_lexicographic_and_distinct():
    flat = [sum(p.rows, ()) for p in enumerate_pp((2, 2, 2))]
    assert len(flat) == 20
    assert flat == sorted(flat)
    assert len(set(flat)) == 20


def test_enumerate_pp_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_pp((5, 5, 5)))
    assert sum(1 for _ in enumerate_pp((5, 5, 5), budget=125)) == 10**4  # B(5,5,5)


@pytest.mark.parametrize(
    "dims,rows,expected",
    [
        ((2, 2, 2), [[2, 2], [0, 0]], True),
        ((2, 2, 2), [[2, 2], [2, 0]], False),
        ((1, 1, 1), [[0]], False),
        ((1, 1, 1), [[1]], False),
        ((2, 2, 2), [[2, 1], [1, 0]], True),
    ],
)
def test_is_self_complementary(dims, rows, expected):
    assert is_self_complementary(hm(dims, rows)) is expected


def test_enumerate_sc_222():
    got = {p.rows for p in enumerate_sc((2, 2, 2))}
    want = {
        ((2, 2), (0, 0)),
        ((2, 1), (1, 0)),
        ((2, 0), (2, 0)),
        ((1, 1), (1, 1)),
    }
    assert got == want


def test_enumerate_sc_213():
    got = {p.rows for p in enumerate_sc((2, 1, 3))}
    assert got == {((3,), (0,)), ((2,), (1,))}


def test_enumerate_sc_all_odd_empty():
    assert list(enumerate_sc((3, 1, 1))) == []
    assert list(enumerate_sc((1, 1, 1))) == []


def test_enumerate_sc_matches_filtered_enumeration():
    for dims in [(2, 2, 2), (2, 1, 3), (1, 4, 4), (3, 2, 2), (2, 2, 4), (3, 3, 2)]:
        via_filter = {p.rows for p in enumerate_pp(dims, budget=10**6) if is_self_complementary(p)}
        via_sc = {p.rows for p in enumerate_sc(dims, budget=10**6)}
        assert via_sc == via_filter, dims


def test_enumerate_sc_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_sc((4, 4, 6)))


@pytest.mark.parametrize(
    "dims,rows",
    [
        ((2, 2, 2), [[2, 2], [0, 0]]),
        ((1, 4, 4), [[4, 4, 0, 0]]),
        ((2, 1, 3), [[3], [0]]),
        ((1, 1, 2), [[1]]),
        ((3, 2, 4), [[4, 0], [4, 0], [4, 0]]),
    ],
)
def test_reference_pp(dims, rows):
    assert reference_pp(dims).rows == hm(dims, rows).rows


def test_reference_pp_rejects_all_odd():
    with pytest.raises(ValueError):
        reference_pp((1, 1, 1))


def test_reference_pp_is_self_complementary():
    for dims in [(2, 2, 2), (1, 4, 4), (2, 1, 3), (1, 1, 2), (4, 3, 5), (3, 4, 2)]:
        assert is_self_complementary(reference_pp(dims))


def test_sign_of_examples():
    ref = reference_pp((2, 2, 2))
    assert sign_of(ref, ref) == 1
    assert sign_of(hm((2, 2, 2), [[2, 1], [1, 0]]), ref) == -1
    assert sign_of(hm((2, 2, 2), [[1, 1], [1, 1]]), ref) == 1


def test_sign_of_rejects_mismatched_boxes():
    with pytest.raises(ValueError):
        sign_of(hm((1, 1, 2), [[1]]), reference_pp((2, 2, 2)))


def test_relative_sign_is_reference_free():
    # sign(p)sign(q) == (-1)^(|p delta q| / 2) for self-complementary p, q
    for dims in [(2, 2, 2), (2, 1, 3), (1, 4, 4)]:
        ref = reference_pp(dims)
        scs = list(enumerate_sc(dims))
        for p in scs:
            for q in scs:
                delta = len(set(p.cubes()) ^ set(q.cubes()))
                assert delta % 2 == 0
                assert sign_of(p, ref) * sign_of(q, ref) == (-1) ** (delta // 2)


@pytest.mark.parametrize("dims,expected", [((2, 2, 2), 2), ((2, 1, 3), 0), ((1, 4, 4), 2)])
def test_signed_count_pp_values(dims, expected):
    assert signed_count_pp(dims) == expected


def test_signed_count_pp_magnitude_matches_closed_form():
    for a in range(4):
        for b in range(5):
            for c in range(5):
                got = abs(signed_count_pp((a, b, c), budget=10**6))
                assert got == signed_count_closed(a, b, c).magnitude, (a, b, c)


def test_signed_count_sign_sequence_222():
    ref = reference_pp((2, 2, 2))
    signs = [sign_of(p, ref) for p in enumerate_sc((2, 2, 2))]
    assert sorted(signs) == [-1, 1, 1, 1]
    assert sum(signs) == 2


# --- rendering -------------------------------------------------------------


def test_render_svg_deterministic():
    p = reference_pp((2, 2, 2))
    assert render_svg(p) == render_svg(p)


def test_render_svg_rhombus_count():
    for dims in [(1, 1, 1), (2, 2, 2), (2, 1, 3), (1, 4, 4)]:
        a, b, c = dims
        for p in enumerate_sc(dims):
            svg = render_svg(p)
            assert svg.count("<polygon") == a * b + b * c + a * c


def test_render_svg_empty_box_projection():
    empty = hm((1, 1, 1), [[0]])
    svg = render_svg(empty)
    assert svg.count("<polygon") == 3


def test_render_svg_metadata_and_validity():
    p = reference_pp((2, 2, 2))
    root = ET.fromstring(render_svg(p))
    assert root.get("data-cubes") == "4"
    assert root.get("data-box") == "2x2x2"
    assert root.get("data-rhombi-top") == "4"
    assert root.get("data-rhombi-side-x") == "4"
    assert root.get("data-rhombi-side-y") == "4"
