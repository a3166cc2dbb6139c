"""Plane partitions as height matrices, with brute-force signed counting.

A plane partition in an a x b x c box is stored as the a x b matrix of its
column heights, weakly decreasing along rows and columns with entries in
[0, c].  Self-complementarity is the height condition
h[i][j] + h[a+1-i][b+1-j] == c.  The signed count weights each
self-complementary partition by (-1)^n where n is the number of its cubes
outside the half-full reference partition; this module is the exhaustive
oracle against which the lattice-path, minor-sum and Pfaffian routes are
checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError
from .formulas import BoxDims, as_box

DEFAULT_PP_BUDGET = 64  # cap on a*b*c for full enumeration
DEFAULT_SC_BUDGET = 32  # cap on a*b*ceil(c/2) for self-complementary runs


@dataclass(frozen=True)
class HeightMatrix:
    """A plane partition in a box, as a tuple of height rows."""

    dims: BoxDims
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a, b, c = self.dims.sides
        if len(self.rows) != a or any(len(r) != b for r in self.rows):
            raise ValueError("height matrix shape does not match box")
        for i in range(a):
            for j in range(b):
                v = self.rows[i][j]
                if not 0 <= v <= c:
                    raise ValueError(f"height {v} outside [0, {c}]")
                if i > 0 and v > self.rows[i - 1][j]:
                    raise ValueError("heights must weakly decrease down columns")
                if j > 0 and v > self.rows[i][j - 1]:
                    raise ValueError("heights must weakly decrease along rows")

    def height(self, i: int, j: int) -> int:
        """Column height at 1-based position (i, j)."""
        return self.rows[i - 1][j - 1]

    def cube_count(self) -> int:
        return sum(sum(r) for r in self.rows)

    def cubes(self) -> Iterator[tuple[int, int, int]]:
        """Yield the cubes (i, j, k), 1-based."""
        for i, row in enumerate(self.rows, start=1):
            for j, h in enumerate(row, start=1):
                for k in range(1, h + 1):
                    yield (i, j, k)


def _check_pp_budget(box: BoxDims, budget: int | None) -> None:
    limit = DEFAULT_PP_BUDGET if budget is None else budget
    cells = box.volume
    if cells > limit:
        raise BudgetExceededError("enumerate_pp", cells, limit)


def _check_sc_budget(box: BoxDims, budget: int | None, operation: str) -> None:
    limit = DEFAULT_SC_BUDGET if budget is None else budget
    free = box.a * box.b * ((box.c + 1) // 2)
    if free > limit:
        raise BudgetExceededError(operation, free, limit)


def enumerate_pp(dims, budget: int | None = None) -> Iterator[HeightMatrix]:
    """Yield every plane partition in the box, ascending lexicographically.

    Order is by the row-major height vector.  Guarded by a cell budget
    (a*b*c <= 64 unless overridden) since the stream has MacMahon-product
    many elements.
    """
    box = as_box(dims)
    _check_pp_budget(box, budget)
    a, b, c = box.sides
    if a == 0 or b == 0:
        yield HeightMatrix(box, tuple(() for _ in range(a)))
        return
    vals = [0] * (a * b)

    def walk(p: int) -> Iterator[HeightMatrix]:
        if p == a * b:
            yield HeightMatrix(
                box, tuple(tuple(vals[i * b : (i + 1) * b]) for i in range(a))
            )
            return
        i, j = divmod(p, b)
        hi = c
        if i > 0:
            hi = min(hi, vals[p - b])
        if j > 0:
            hi = min(hi, vals[p - 1])
        for v in range(hi + 1):
            vals[p] = v
            yield from walk(p + 1)

    yield from walk(0)


def is_self_complementary(p: HeightMatrix) -> bool:
    """True iff the partition and its point reflection tile the full box."""
    a, b, c = p.dims.sides
    for i in range(a):
        for j in range(b):
            if p.rows[i][j] + p.rows[a - 1 - i][b - 1 - j] != c:
                return False
    return True


def _sc_walker(box: BoxDims, budget: int | None, operation: str):
    """Yield raw row-major height vectors of the self-complementary partitions.

    Only the first half of the positions under the rotation pairing is free;
    the partner of row-major position p is a*b-1-p and carries height
    c - h[p].  The lone middle position of an odd-area floor forces c/2, so
    boxes with a, b odd and c odd yield nothing.
    """
    _check_sc_budget(box, budget, operation)
    a, b, c = box.sides
    total = a * b
    if total == 0:
        yield []
        return
    vals = [0] * total

    def bound(p: int) -> int:
        i, j = divmod(p, b)
        hi = c
        if i > 0:
            hi = min(hi, vals[p - b])
        if j > 0:
            hi = min(hi, vals[p - 1])
        return hi

    def walk(p: int):
        if p == total:
            yield vals
            return
        partner = total - 1 - p
        if p < partner:
            for v in range(bound(p) + 1):
                vals[p] = v
                yield from walk(p + 1)
        elif p == partner:
            if c % 2 == 1:
                return
            v = c // 2
            if v <= bound(p):
                vals[p] = v
                yield from walk(p + 1)
        else:
            v = c - vals[partner]
            if v <= bound(p):
                vals[p] = v
                yield from walk(p + 1)

    yield from walk(0)


def enumerate_sc(dims, budget: int | None = None) -> Iterator[HeightMatrix]:
    """Yield exactly the self-complementary plane partitions in the box.

    Deterministic order: ascending lexicographic in the free half of the
    height vector.  The count equals Stanley's product formula.
    """
    box = as_box(dims)
    a, b = box.a, box.b
    for vals in _sc_walker(box, budget, "enumerate_sc"):
        yield HeightMatrix(
            box, tuple(tuple(vals[i * b : (i + 1) * b]) for i in range(a))
        )


def reference_pp(dims) -> HeightMatrix:
    """The half-full plane partition used as the +1 anchor of the sign.

    Fills half the box perpendicular to the first even side: the top a/2
    rows at full height when a is even, the left b/2 columns when only b is
    even among a, b; otherwise (a, b odd, c even) a uniform slab of height
    c/2.  Rejects all-odd boxes, which have no self-complementary partition.
    """
    box = as_box(dims)
    a, b, c = box.sides
    if a % 2 == 0:
        rows = tuple(
            tuple(c if i < a // 2 else 0 for _ in range(b)) for i in range(a)
        )
    elif b % 2 == 0:
        rows = tuple(
            tuple(c if j < b // 2 else 0 for j in range(b)) for _ in range(a)
        )
    elif c % 2 == 0:
        rows = tuple(tuple(c // 2 for _ in range(b)) for _ in range(a))
    else:
        raise ValueError("an all-odd box has no half-full plane partition")
    return HeightMatrix(box, rows)


def _excess_parity(rows, ref_rows) -> int:
    """Parity of the number of cubes in ``rows`` not in ``ref_rows``."""
    n = 0
    for r, s in zip(rows, ref_rows):
        for v, w in zip(r, s):
            if v > w:
                n += v - w
    return n & 1


def sign_of(p: HeightMatrix, ref: HeightMatrix) -> int:
    """(-1)^n where n counts cubes of p outside the reference partition.

    n also equals the number of rotation orbits on which p and ref pick
    opposite halves, so this is the orbit-flip sign anchored at ref.
    """
    if p.dims != ref.dims:
        raise ValueError("partitions live in different boxes")
    return -1 if _excess_parity(p.rows, ref.rows) else 1


def signed_count_pp(dims, budget: int | None = None) -> int:
    """Sum of sign_of over all self-complementary partitions (oracle A)."""
    box = as_box(dims)
    a, b, c = box.sides
    if a % 2 == 1 and b % 2 == 1 and c % 2 == 1:
        return 0
    ref = reference_pp(box)
    ref_flat = [v for row in ref.rows for v in row]
    total = 0
    for vals in _sc_walker(box, budget, "signed_count_pp"):
        n = 0
        for v, w in zip(vals, ref_flat):
            if v > w:
                n += v - w
        total += -1 if n & 1 else 1
    return total


# --- SVG rendering of the lozenge tiling ---------------------------------

_EDGE = 20.0  # rhombus edge length in px
_SQ3_2 = 0.8660254037844386  # sqrt(3)/2

# Axonometric images of the three unit vectors; the box edge of length a
# projects vertically so the hexagon's a-sides are the vertical ones.
_EX = (0.0, _EDGE)
_EY = (_EDGE * _SQ3_2, -_EDGE / 2)
_EZ = (-_EDGE * _SQ3_2, -_EDGE / 2)

_FILL = {"top": "#d7e3f4", "side_x": "#5b84b1", "side_y": "#a8c686"}


def _project(x: int, y: int, z: int) -> tuple[float, float]:
    return (
        x * _EX[0] + y * _EY[0] + z * _EZ[0],
        x * _EX[1] + y * _EY[1] + z * _EZ[1],
    )


def _faces(p: HeightMatrix):
    """The visible surface of the stack as quads, one rhombus per grid line.

    Exactly a*b top faces, b*c faces perpendicular to the x axis and a*c
    perpendicular to the y axis -- together a tiling of the hexagon.
    """
    a, b, c = p.dims.sides
    quads = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            z = p.rows[i - 1][j - 1]
            quads.append(
                ("top", ((i - 1, j - 1, z), (i, j - 1, z), (i, j, z), (i - 1, j, z)))
            )
    for j in range(1, b + 1):
        for k in range(1, c + 1):
            t = sum(1 for i in range(a) if p.rows[i][j - 1] >= k)
            quads.append(
                ("side_x", ((t, j - 1, k - 1), (t, j, k - 1), (t, j, k), (t, j - 1, k)))
            )
    for i in range(1, a + 1):
        for k in range(1, c + 1):
            s = sum(1 for j in range(b) if p.rows[i - 1][j] >= k)
            quads.append(
                ("side_y", ((i - 1, s, k - 1), (i, s, k - 1), (i, s, k), (i - 1, s, k)))
            )
    return quads


def render_svg(p: HeightMatrix) -> str:
    """Render the (1,1,1)-projection of the partition as a lozenge tiling.

    Deterministic byte output for a fixed input; the cube count and the
    per-orientation rhombus counts are embedded as data attributes.
    """
    a, b, c = p.dims.sides
    quads = _faces(p)
    corners = [(0, 0, 0), (a, 0, 0), (a, b, 0), (a, b, c), (0, b, c), (0, 0, c),
               (a, 0, c), (0, b, 0)]
    pts = [_project(*v) for v in corners]
    margin = _EDGE
    minx = min(x for x, _ in pts) - margin
    miny = min(y for _, y in pts) - margin
    maxx = max(x for x, _ in pts) + margin
    maxy = max(y for _, y in pts) + margin
    w = maxx - minx
    h = maxy - miny

    def fmt(v: float) -> str:
        s = f"{v:.2f}"
        return "0.00" if s == "-0.00" else s

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(w)}" height="{fmt(h)}" '
        f'viewBox="0 0 {fmt(w)} {fmt(h)}" '
        f'data-box="{a}x{b}x{c}" data-cubes="{p.cube_count()}" '
        f'data-rhombi-top="{a * b}" data-rhombi-side-x="{b * c}" '
        f'data-rhombi-side-y="{a * c}">',
    ]
    for kind, quad in quads:
        coords = " ".join(
            f"{fmt(x - minx)},{fmt(y - miny)}" for x, y in (_project(*v) for v in quad)
        )
        lines.append(
            f'<polygon class="{kind}" fill="{_FILL[kind]}" '
            f'stroke="#1c2833" stroke-width="0.75" points="{coords}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
