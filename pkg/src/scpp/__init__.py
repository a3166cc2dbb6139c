"""Exact enumeration of self-complementary plane partitions in a box.

Implements the counting both ways: closed product formulas (MacMahon's box
count, Stanley's self-complementary count, and the closed form for the
signed enumeration under the orbit-flip weight) and exact constructive
methods (brute-force enumeration, nonintersecting lattice path families, a
minor sum of the signed path-count matrix, and a single Pfaffian).  All
arithmetic is arbitrary-precision integer or rational; nothing here touches
floating point.
"""

from .errors import BudgetExceededError
from .formulas import (
    BoxDims,
    ClosedCount,
    NormalizedBox,
    ParityCase,
    as_box,
    box_count,
    normalize_box,
    sc_count,
    signed_count_closed,
)
from .linalg import (
    det_bareiss,
    factorization_experiment,
    four_variable_matrix,
    iw_identity_check,
    lgv_determinant,
    minor_sum,
    pf_combinatorial,
    pf_elimination,
    sc_count_pfaffian,
    signed_count_pfaffian,
    symmetric_minor_pfaffian,
    symmetric_minor_sum_direct,
)
from .numeric import binom, binom_poly, qbin_neg1, qbin_poly_at, rising
from .paths import (
    end_points,
    global_sign,
    path_weight_entry,
    path_weight_matrix,
    signed_count_paths,
    single_path_signed_count,
    start_points,
    symmetric_selections,
)
from .pp import (
    HeightMatrix,
    enumerate_pp,
    enumerate_sc,
    is_self_complementary,
    reference_pp,
    render_svg,
    sign_of,
    signed_count_pp,
)

__version__ = "0.1.0"

__all__ = [
    "BoxDims",
    "BudgetExceededError",
    "ClosedCount",
    "HeightMatrix",
    "NormalizedBox",
    "ParityCase",
    "as_box",
    "binom",
    "binom_poly",
    "box_count",
    "det_bareiss",
    "end_points",
    "enumerate_pp",
    "enumerate_sc",
    "factorization_experiment",
    "four_variable_matrix",
    "global_sign",
    "is_self_complementary",
    "iw_identity_check",
    "lgv_determinant",
    "minor_sum",
    "normalize_box",
    "path_weight_entry",
    "path_weight_matrix",
    "pf_combinatorial",
    "pf_elimination",
    "qbin_neg1",
    "qbin_poly_at",
    "reference_pp",
    "render_svg",
    "rising",
    "sc_count",
    "sc_count_pfaffian",
    "sign_of",
    "signed_count_closed",
    "signed_count_paths",
    "signed_count_pfaffian",
    "signed_count_pp",
    "single_path_signed_count",
    "start_points",
    "symmetric_minor_pfaffian",
    "symmetric_minor_sum_direct",
    "symmetric_selections",
]
