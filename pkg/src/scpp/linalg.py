"""Exact determinants, Pfaffians, and the matrix routes to the enumeration.

Matrices are plain lists of rows with int (or Fraction) entries.  Two
independent Pfaffian algorithms are provided: the definitional sum over
perfect matchings (small sizes, used as an oracle) and fraction-free-style
elimination over exact rationals.  On top of these sit the
Lindstrom-Gessel-Viennot determinant, the Ishikawa-Wakayama minor-summation
identity and its specialization to symmetric minor sums, the single-Pfaffian
formulas for the signed and the ordinary self-complementary enumeration, and
the four-variable generalization whose Pfaffian is probed for linear
factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterator, Sequence

from .errors import BudgetExceededError
from .formulas import NormalizedBox, ParityCase, as_box, normalize_box
from .numeric import binom, binom_poly
from .paths import Point, global_sign, path_weight_matrix, selection_sign, symmetric_selections

Matrix = list[list[int]]

DEFAULT_SELECTION_BUDGET = 4096  # cap on endpoint selections in minor_sum
_PF_COMBINATORIAL_LIMIT = 12  # (2n-1)!! terms beyond this is pointless


# --- determinants ----------------------------------------------------------


def det_bareiss(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(m: Sequence[Sequence[int]]) -> int:
    """Determinant by cofactor expansion; exponential, test oracle only."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [[row[t] for t in range(n) if t != j] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total += -term if j % 2 else term
    return total


# --- Pfaffians -------------------------------------------------------------


def _check_skew(m: Sequence[Sequence]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("Pfaffian needs a square matrix")
    if n % 2 != 0:
        raise ValueError("Pfaffian needs even dimension")
    for i in range(n):
        if m[i][i] != 0:
            raise ValueError("Pfaffian needs zero diagonal")
        for j in range(i + 1, n):
            if m[i][j] != -m[j][i]:
                raise ValueError("Pfaffian needs a skew-symmetric matrix")
    return n


def iter_perfect_matchings(n: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    """All perfect matchings of {0..n-1} with their permutation signs.

    Pairs come in the canonical order: each pair (i, j) has i < j and pairs
    are sorted by their smaller element; the sign is that of the flattened
    pair sequence read as a permutation.
    """
    if n % 2 != 0:
        raise ValueError("perfect matchings need an even ground set")

    def rec(items: tuple[int, ...]) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
        if not items:
            yield ((), 1)
            return
        first = items[0]
        rest = items[1:]
        for t, partner in enumerate(rest):
            sub = rest[:t] + rest[t + 1 :]
            factor = -1 if t % 2 else 1
            for pairs, sign in rec(sub):
                yield (((first, partner),) + pairs, factor * sign)

    yield from rec(tuple(range(n)))


def pf_combinatorial(m: Sequence[Sequence[int]]):
    """Pfaffian as the signed sum over perfect matchings (definition).

    Guarded: the sum has (n-1)!! terms, so dimensions above
    12 are refused.  Oracle for :func:`pf_elimination`.
    """
    n = _check_skew(m)
    if n > _PF_COMBINATORIAL_LIMIT:
        raise ValueError(
            f"combinatorial Pfaffian limited to dimension {_PF_COMBINATORIAL_LIMIT}"
        )
    total = 0
    for pairs, sign in iter_perfect_matchings(n):
        term = sign
        for i, j in pairs:
            term *= m[i][j]
            if term == 0:
                break
        total += term
    return total


def pf_elimination(m: Sequence[Sequence]):
    """Exact Pfaffian by simultaneous row/column elimination over rationals.

    Each 2x2 block step multiplies the result by the pivot and updates the
    trailing submatrix by the exact Schur-type rule; a zero pivot is repaired
    by a simultaneous row-and-column swap (sign flip) or, failing that, the
    Pfaffian is zero.  Returns an int when the input is integral.
    """
    n = _check_skew(m)
    integral = all(isinstance(v, int) for row in m for v in row)
    a = [[Fraction(v) for v in row] for row in m]
    result = Fraction(1)

    def swap(r: int, s: int) -> None:
        a[r], a[s] = a[s], a[r]
        for row in a:
            row[r], row[s] = row[s], row[r]

    for t in range(0, n, 2):
        if a[t][t + 1] == 0:
            r = next((r for r in range(t + 2, n) if a[t][r] != 0), None)
            if r is None:
                return 0
            swap(r, t + 1)
            result = -result
        p = a[t][t + 1]
        result *= p
        for i in range(t + 2, n):
            bi, ci = a[t][i], a[t + 1][i]
            if bi == 0 and ci == 0:
                continue
            for j in range(i + 1, n):
                delta = (bi * a[t + 1][j] - a[t][j] * ci) / p
                if delta:
                    a[i][j] -= delta
                    a[j][i] = -a[i][j]
    if integral:
        assert result.denominator == 1
        return int(result)
    return result


def pf(m: Sequence[Sequence]):
    """Pfaffian of a skew-symmetric even-dimensional matrix."""
    return pf_elimination(m)


# --- LGV determinant and minor summation -----------------------------------


def lgv_determinant(
    startpts: Sequence[Point],
    endpts: Sequence[Point],
    entry: Callable[[Point, Point], int],
) -> int:
    """det(entry(A_i, E_j)): signed nonintersecting-family count.

    With ``entry`` the signed single-path count and points on diagonals (so
    every crossing assignment forces an intersection), this is the
    Lindstrom-Gessel-Viennot count of nonintersecting path families.
    """
    if len(startpts) != len(endpts):
        raise ValueError("need as many start as end points")
    return det_bareiss([[entry(a, e) for e in endpts] for a in startpts])


def minor_sum(dims, budget: int | None = None) -> int:
    """Signed enumeration as a sum of maximal minors of the path matrix.

    For each symmetric endpoint selection the corresponding a x a minor of
    the a x (a+b) signed path-count matrix is a family count; the global
    sign (and, for all-even boxes, the per-selection sign) matches the path
    oracle.  Guarded by a budget on the number of selections.
    """
    box = as_box(dims)
    n = normalize_box(box)
    if n.case is ParityCase.OOO:
        return 0
    a, b, _ = n.sides
    half = (a + b) // 2 if a % 2 == 0 else (a + b - 1) // 2
    take = a // 2 if a % 2 == 0 else (a - 1) // 2
    count = math.comb(half, take)
    limit = DEFAULT_SELECTION_BUDGET if budget is None else budget
    if count > limit:
        raise BudgetExceededError("minor_sum", count, limit)
    t = path_weight_matrix(a, b, n.x)
    total = 0
    for sel in symmetric_selections(a, b):
        minor = [[t[i][k - 1] for k in sel] for i in range(a)]
        total += selection_sign(n.case, sel, a, b) * det_bareiss(minor)
    return global_sign(n) * total


def _transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def _matmul(x: Sequence[Sequence], y: Sequence[Sequence]) -> list[list]:
    if not x or not y:
        return [[]] if not x else [[] for _ in x]
    cols = len(y[0])
    return [
        [sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(cols)]
        for i in range(len(x))
    ]


def iw_identity_check(a_skew: Matrix, t_rect: Matrix) -> bool:
    """Check the Ishikawa-Wakayama minor summation identity on one instance.

    For a p x p skew-symmetric A and p x n matrix T with n even, n <= p:
    sum over n-subsets K of Pf(A[K,K]) * det(T[K rows]) must equal
    Pf(T^t A T).  Both sides are evaluated exactly and compared.
    """
    p = len(a_skew)
    _check_skew(a_skew)
    if len(t_rect) != p:
        raise ValueError("T must have as many rows as A")
    n = len(t_rect[0]) if t_rect else 0
    if any(len(row) != n for row in t_rect):
        raise ValueError("T must be rectangular")
    if n % 2 != 0 or n > p:
        raise ValueError("need n even and n <= p")
    lhs = 0
    for ks in combinations(range(p), n):
        sub_a = [[a_skew[i][j] for j in ks] for i in ks]
        sub_t = [t_rect[i] for i in ks]
        lhs += pf_elimination(sub_a) * det_bareiss(sub_t)
    rhs = pf_elimination(_matmul(_matmul(_transpose(t_rect), a_skew), t_rect))
    return lhs == rhs


def symmetric_minor_pfaffian(s: Matrix) -> int:
    """Pfaffian form of the symmetric minor sum of a 2m x 2n matrix.

    Specializes the minor summation identity to A = [[0, I], [-I, 0]] after
    reordering the right half of the columns; entrywise the Pfaffian
    argument is sum_k (S[i][k] S[j][2n+1-k] - S[j][k] S[i][2n+1-k]).
    Equals :func:`symmetric_minor_sum_direct`.
    """
    rows = len(s)
    if rows % 2 != 0 or (rows and len(s[0]) % 2 != 0):
        raise ValueError("need a 2m x 2n matrix")
    m = rows // 2
    cols = len(s[0]) if s else 0
    n = cols // 2
    if any(len(row) != cols for row in s):
        raise ValueError("matrix must be rectangular")
    if m > n:
        raise ValueError("need m <= n")
    pair = [
        [
            sum(s[i][k] * s[j][cols - 1 - k] - s[j][k] * s[i][cols - 1 - k] for k in range(n))
            for j in range(rows)
        ]
        for i in range(rows)
    ]
    return pf_elimination(pair)


def symmetric_minor_sum_direct(s: Matrix) -> int:
    """Direct evaluation of the symmetric minor sum (oracle).

    Sum over 1 <= k_1 < ... < k_m <= n of the determinant of the columns
    k_1..k_m followed by their mirrors 2n+1-k_m..2n+1-k_1.
    """
    rows = len(s)
    m = rows // 2
    cols = len(s[0]) if s else 0
    n = cols // 2
    total = 0
    for ks in combinations(range(1, n + 1), m):
        idx = list(ks) + [cols + 1 - k for k in reversed(ks)]
        total += det_bareiss([[s[i][j - 1] for j in idx] for i in range(rows)])
    return total


# --- single-Pfaffian enumeration formulas ----------------------------------


def signed_count_pfaffian_matrix(dims) -> tuple[int, Matrix]:
    """Prefactor and skew matrix whose Pfaffian gives the signed count.

    The matrix packs the whole symmetric minor sum of the path-count matrix
    into one Pfaffian: entries are the pairings sum over mirrored column
    pairs (column k weighted by (-1)^k in the all-even case, carrying the
    per-selection sign), and odd a adds a border of middle-column entries,
    which contributes an extra (-1)^((a-1)/2) to the prefactor.
    """
    n = normalize_box(as_box(dims))
    if n.case is ParityCase.OOO:
        raise ValueError("all-odd boxes are handled upstream; no matrix exists")
    a, b, _ = n.sides
    t = path_weight_matrix(a, b, n.x)

    def tt(i: int, j: int) -> int:
        return t[i - 1][j - 1]

    def pair_sum(i: int, j: int, bound: int, alternate: bool) -> int:
        acc = 0
        for k in range(1, bound + 1):
            term = tt(i, k) * tt(j, a + b + 1 - k) - tt(j, k) * tt(i, a + b + 1 - k)
            acc += -term if alternate and k % 2 else term
        return acc

    if n.case is ParityCase.EOO:
        size = a
        bound = (a + b - 1) // 2
        mat = [[pair_sum(i, j, bound, False) for j in range(1, size + 1)] for i in range(1, size + 1)]
        return global_sign(n), mat
    if n.case is ParityCase.EEE:
        size = a
        bound = (a + b) // 2
        mat = [[pair_sum(i, j, bound, True) for j in range(1, size + 1)] for i in range(1, size + 1)]
        return global_sign(n), mat
    # odd a: border with the forced middle column
    bound = (a + b - 1) // 2
    mid = (a + b + 1) // 2
    size = a + 1
    mat = [[0] * size for _ in range(size)]
    for i in range(1, a + 1):
        for j in range(i + 1, a + 1):
            v = pair_sum(i, j, bound, False)
            mat[i - 1][j - 1] = v
            mat[j - 1][i - 1] = -v
    for i in range(1, a + 1):
        mat[i - 1][a] = tt(i, mid)
        mat[a][i - 1] = -tt(i, mid)
    border_sign = -1 if ((a - 1) // 2) % 2 else 1
    return global_sign(n) * border_sign, mat


def signed_count_pfaffian(dims) -> int:
    """Signed enumeration as a single Pfaffian (the fast exact method)."""
    n = normalize_box(as_box(dims))
    if n.case is ParityCase.OOO:
        return 0
    prefactor, mat = signed_count_pfaffian_matrix(dims)
    return prefactor * pf_elimination(mat)


def sc_count_pfaffian(dims) -> int:
    """Ordinary self-complementary count as a single Pfaffian.

    Same construction as the signed count but with ordinary binomial path
    counts; must reproduce Stanley's product formula exactly.
    """
    n = normalize_box(as_box(dims))
    if n.case is ParityCase.OOO:
        return 0
    a, b, c = n.sides
    bx = b + n.x

    def pair_sum(i: int, j: int, bound: int) -> int:
        return sum(
            binom(bx, b + i - k) * binom(bx, j + k - a - 1)
            - binom(bx, b + j - k) * binom(bx, i + k - a - 1)
            for k in range(1, bound + 1)
        )

    if a % 2 == 0:
        bound = (a + b) // 2
        mat = [[pair_sum(i, j, bound) for j in range(1, a + 1)] for i in range(1, a + 1)]
        return pf_elimination(mat)
    bound = (a + b - 1) // 2
    mid = (a + b + 1) // 2
    size = a + 1
    mat = [[0] * size for _ in range(size)]
    for i in range(1, a + 1):
        for j in range(i + 1, a + 1):
            v = pair_sum(i, j, bound)
            mat[i - 1][j - 1] = v
            mat[j - 1][i - 1] = -v
    for i in range(1, a + 1):
        v = binom(bx, b + i - mid)
        mat[i - 1][a] = v
        mat[a][i - 1] = -v
    border_sign = -1 if ((a - 1) // 2) % 2 else 1
    return border_sign * pf_elimination(mat)


# --- four-variable generalization and the factorization experiment ---------


def four_variable_matrix(m1, m2, n1, n2, a: int, b: int) -> Matrix:
    """Skew matrix generalizing the even-a signed-count Pfaffian matrix.

    The four binomial slots of the split pairing sum take independent top
    arguments m1, m2, n1, n2 (as polynomials, so negative values are fine);
    setting all four to (b+x-1)/2 recovers the matrix of
    :func:`signed_count_pfaffian_matrix` for the box (a, b, b+2x) with x
    even and b odd.
    """
    if a < 0 or a % 2 != 0:
        raise ValueError("need a even and nonnegative")
    if b < 1 or b % 2 != 1:
        raise ValueError("need b odd and positive")
    half_b = (b - 1) // 2
    half_a = a // 2
    lo = (a + b - 1) // 4
    hi = -((a + b - 1) // -4)  # ceil

    def entry(i: int, j: int):
        s1 = 0
        for l in range(1, lo + 1):
            s1 += binom_poly(n1, half_b + (i - 1) // 2 - l + 1) * binom_poly(
                m1, (j - 1) // 2 + l - half_a
            ) - binom_poly(n1, half_b + (j - 1) // 2 - l + 1) * binom_poly(
                m1, (i - 1) // 2 + l - half_a
            )
        if (i + j) % 2:
            s1 = -s1
        s2 = 0
        for l in range(1, hi + 1):
            s2 += binom_poly(n2, half_b + i // 2 - l + 1) * binom_poly(
                m2, j // 2 + l - half_a - 1
            ) - binom_poly(n2, half_b + j // 2 - l + 1) * binom_poly(
                m2, i // 2 + l - half_a - 1
            )
        return s1 + s2

    mat = [[0] * a for _ in range(a)]
    for i in range(1, a + 1):
        for j in range(i + 1, a + 1):
            v = entry(i, j)
            mat[i - 1][j - 1] = v
            mat[j - 1][i - 1] = -v
    return mat


_VARIABLES = ("m1", "m2", "n1", "n2")


def _entry_degree(var: str, a: int, b: int) -> int:
    """Max degree of any matrix entry as a polynomial in one variable."""
    half_b = (b - 1) // 2
    half_a = a // 2
    lo = (a + b - 1) // 4
    hi = -((a + b - 1) // -4)
    best = 0
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            if var == "n1":
                rs = [half_b + (i - 1) // 2 - l + 1 for l in range(1, lo + 1)]
            elif var == "m1":
                rs = [(j - 1) // 2 + l - half_a for l in range(1, lo + 1)]
            elif var == "n2":
                rs = [half_b + i // 2 - l + 1 for l in range(1, hi + 1)]
            else:
                rs = [j // 2 + l - half_a - 1 for l in range(1, hi + 1)]
            best = max(best, max((r for r in rs if r >= 0), default=0))
    return best


def _lagrange_coeffs(xs: Sequence[int], ys: Sequence) -> list[Fraction]:
    """Coefficients (ascending) of the interpolating polynomial, exact."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        if ys[i] == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis[:]
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for t, c in enumerate(basis):
            coeffs[t] += scale * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_eval(coeffs: Sequence, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_linear_factors(coeffs: Sequence[Fraction]):
    """Split a rational polynomial into linear factors by rational roots.

    Returns (scalar, roots, residual): poly = scalar * prod (x - r) over the
    root list (with multiplicity) * residual, where residual is a monic
    coefficient list with no rational roots, or None when the polynomial
    splits completely.  Only rational roots are attempted, so an irreducible
    quadratic (or worse) lands in the residual verbatim.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs or all(c == 0 for c in coeffs):
        return Fraction(0), [], None
    roots: list[Fraction] = []
    while coeffs[0] == 0 and len(coeffs) > 1:
        roots.append(Fraction(0))
        coeffs = coeffs[1:]
    while len(coeffs) > 1:
        scale = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * scale) for c in coeffs]
        content = math.gcd(*ints)
        if content:
            ints = [v // content for v in ints]
        found = None
        for p in _divisors(ints[0]):
            for q in _divisors(ints[-1]):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if poly_eval(ints, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        # synthetic division of the ascending coefficients by (x - found)
        quot = [Fraction(0)] * (len(coeffs) - 1)
        acc = Fraction(0)
        for t in range(len(coeffs) - 1, 0, -1):
            acc = coeffs[t] + acc * found
            quot[t - 1] = acc
        coeffs = quot
    if len(coeffs) == 1:
        return coeffs[0], sorted(roots), None
    monic = [c / coeffs[-1] for c in coeffs]
    return coeffs[-1], sorted(roots), monic


@dataclass(frozen=True)
class SliceFactorization:
    """One univariate slice of the Pfaffian and its factorization attempt."""

    variable: str
    fixed: tuple[tuple[str, int], ...]
    degree: int
    coefficients: tuple[str, ...]
    scalar: str
    roots: tuple[str, ...]
    residual: tuple[str, ...] | None

    @property
    def splits_linearly(self) -> bool:
        return self.residual is None


@dataclass(frozen=True)
class ExperimentReport:
    """Observational report: which sampled slices split into linear factors."""

    a: int
    b: int
    grid: tuple[int, ...]
    slices: tuple[SliceFactorization, ...]

    @property
    def all_split(self) -> bool:
        return all(s.splits_linearly for s in self.slices)

    def failures(self) -> list[SliceFactorization]:
        return [s for s in self.slices if not s.splits_linearly]


def factorization_experiment(a: int, b: int, grid) -> ExperimentReport:
    """Probe univariate slices of Pf(four_variable_matrix) for linear splits.

    For each of the four variables in turn, the other three are pinned to
    every grid combination, the Pfaffian is interpolated exactly as a
    polynomial in the free variable, and a rational-root factorization is
    attempted.  The outcome is reported, never asserted: a slice that does
    not split is listed with its residual.
    """
    if a % 2 != 0 or a < 0 or a > 6:
        raise ValueError("experiment needs a even with 0 <= a <= 6")
    grid = tuple(grid)
    if not grid:
        raise ValueError("empty grid")
    slices = []
    for var_idx, var in enumerate(_VARIABLES):
        others = [v for v in _VARIABLES if v != var]
        degree_bound = (a // 2) * _entry_degree(var, a, b)
        nodes = list(range(degree_bound + 1))
        for assignment in product(grid, repeat=3):
            fixed = dict(zip(others, assignment))
            ys = []
            for t in nodes:
                args = {**fixed, var: t}
                mat = four_variable_matrix(
                    args["m1"], args["m2"], args["n1"], args["n2"], a, b
                )
                ys.append(pf_elimination(mat))
            coeffs = _lagrange_coeffs(nodes, ys)
            scalar, roots, residual = rational_linear_factors(coeffs)
            slices.append(
                SliceFactorization(
                    variable=var,
                    fixed=tuple(sorted(fixed.items())),
                    degree=len(coeffs) - 1,
                    coefficients=tuple(str(c) for c in coeffs),
                    scalar=str(scalar),
                    roots=tuple(str(r) for r in roots),
                    residual=None if residual is None else tuple(str(c) for c in residual),
                )
            )
    return ExperimentReport(a=a, b=b, grid=grid, slices=tuple(slices))
