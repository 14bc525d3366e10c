"""Exact Castelnuovo-Mumford regularity over prime fields.

Computes reg(S/I) and its partial values for a homogeneous ideal I in
S = F_p[x_1..x_n] by reading staircase corners off evaluations of the
reverse-lex initial ideal, with seeded coordinate changes when an
evaluation is not in general position and a definitional oracle that
recomputes every reported value independently.
"""

from .groebner import (
    apply_linear_change,
    buchberger,
    initial_ideal,
    is_groebner_basis,
    matrix_digest,
    random_linear_change,
    reduce,
    s_polynomial,
    sample_change_matrix,
)
from .monideal import (
    MonomialIdeal,
    colon_by_var,
    contains,
    difference_degree_counts,
    evaluate_one,
    evaluate_zero,
    gap_search_ceiling,
    graded_dim_quotient,
    krull_dim,
    lcm_degree,
    lcm_gens,
    minimalize,
    saturate_by_var,
)
from .oracle import (
    CrossCheckRecord,
    LevelCheck,
    a_def,
    a_def_with_trace,
    borel_closure,
    cross_check,
    is_strongly_stable,
    r_def,
    random_strongly_stable_ideal,
)
from .regularity import (
    CurveReport,
    RegularityReport,
    RetriesExhaustedError,
    RetryRecord,
    compute_report,
    curve_report,
    derive_matrix_seed,
    reg_bound,
    zerodivisor_flags,
)
from .ring import (
    DEFAULT_CHAR,
    ParseError,
    Polynomial,
    Ring,
    exp_add,
    exp_degree,
    exp_divides,
    exp_lcm,
    exp_sub,
    format_polynomial,
    is_prime,
    parse_exponent,
    parse_polynomial,
    revlex_compare,
    revlex_key,
)
from .staircase import (
    NEG_INF,
    CornerSet,
    ExponentSet,
    c_value,
    corners,
    corners_reference,
    exponent_set,
    is_artinian,
    is_c_finite,
    r_value,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CHAR",
    "NEG_INF",
    "CornerSet",
    "CrossCheckRecord",
    "CurveReport",
    "ExponentSet",
    "LevelCheck",
    "MonomialIdeal",
    "ParseError",
    "Polynomial",
    "RegularityReport",
    "RetriesExhaustedError",
    "RetryRecord",
    "Ring",
    "a_def",
    "a_def_with_trace",
    "apply_linear_change",
    "borel_closure",
    "buchberger",
    "c_value",
    "colon_by_var",
    "compute_report",
    "contains",
    "corners",
    "corners_reference",
    "cross_check",
    "curve_report",
    "derive_matrix_seed",
    "difference_degree_counts",
    "evaluate_one",
    "evaluate_zero",
    "exp_add",
    "exp_degree",
    "exp_divides",
    "exp_lcm",
    "exp_sub",
    "exponent_set",
    "format_polynomial",
    "gap_search_ceiling",
    "graded_dim_quotient",
    "initial_ideal",
    "is_artinian",
    "is_c_finite",
    "is_groebner_basis",
    "is_prime",
    "is_strongly_stable",
    "krull_dim",
    "lcm_degree",
    "lcm_gens",
    "matrix_digest",
    "minimalize",
    "parse_exponent",
    "parse_polynomial",
    "r_def",
    "r_value",
    "random_linear_change",
    "random_strongly_stable_ideal",
    "reduce",
    "reg_bound",
    "revlex_compare",
    "revlex_key",
    "s_polynomial",
    "sample_change_matrix",
    "zerodivisor_flags",
]
