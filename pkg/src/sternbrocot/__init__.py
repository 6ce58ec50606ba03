"""Exact arithmetic around Euclid's algorithm and the trees it generates.

Everything here runs on arbitrary-precision integers: the subtractive gcd
with its trace and trial-division oracle, the 2x2-matrix form of Euclid's
algorithm with Bezout certificates, an exhaustively checkable catalogue of
gcd identities, distributivity checks for functions like Fibonacci and
k^m - 1, a constant-state enumerator of the positive rationals in
Eisenstein-Stern, Stern-Brocot, and Newman orders, Eisenstein arrays, and
Brocot's mediant table for approximating ratios under a denominator bound.
"""

from .brocot import BrocotRow, BrocotTable, best_bracket, brocot_table, mediant
from .core import (
    GcdTrace,
    divides,
    gcd,
    gcd_int,
    gcd_oracle,
    gcd_subtractive,
    gcd_traced,
)
from .distributivity import (
    FIBONACCI,
    NatFunction,
    check_lemma_condition,
    distributes_over_gcd,
    fib,
    fib_multiple_property,
    fib_witness,
    linear_witness,
    mersenne,
    mersenne_gen,
    mersenne_witness,
    times,
)
from .eisenstein import EiTriple, ei_enumerate, ei_pairs_equal_tree, ei_rows, ei_triples
from .enumeration import (
    EISENSTEIN_STERN,
    NEWMAN,
    ORDERS,
    STERN_BROCOT,
    Rational,
    enum_step,
    enumerate_rationals,
    newman_step,
    project_eisenstein_stern,
    project_stern_brocot,
    tree_levels,
)
from .identities import (
    IdentityReport,
    check_coprime_absorb,
    check_euclids_lemma,
    check_gcd_mult,
    check_lattice_gcd,
    check_scaling,
    lattice_point_count,
)
from .matrices import (
    IDENTITY,
    L,
    L_INV,
    R,
    R_INV,
    BezoutCertificate,
    LRWord,
    Mat2,
    bezout,
    euclid_matrix,
    euclid_matrix_col,
    lr_order_lt,
    mat_mul,
    mat_times_col,
    row_times_mat,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "BrocotRow",
    "BrocotTable",
    "EISENSTEIN_STERN",
    "EiTriple",
    "FIBONACCI",
    "GcdTrace",
    "IDENTITY",
    "IdentityReport",
    "L",
    "L_INV",
    "LRWord",
    "Mat2",
    "NEWMAN",
    "NatFunction",
    "ORDERS",
    "R",
    "R_INV",
    "Rational",
    "STERN_BROCOT",
    "best_bracket",
    "bezout",
    "brocot_table",
    "check_coprime_absorb",
    "check_euclids_lemma",
    "check_gcd_mult",
    "check_lattice_gcd",
    "check_lemma_condition",
    "check_scaling",
    "distributes_over_gcd",
    "divides",
    "ei_enumerate",
    "ei_pairs_equal_tree",
    "ei_rows",
    "ei_triples",
    "enum_step",
    "enumerate_rationals",
    "euclid_matrix",
    "euclid_matrix_col",
    "fib",
    "fib_multiple_property",
    "fib_witness",
    "gcd",
    "gcd_int",
    "gcd_oracle",
    "gcd_subtractive",
    "gcd_traced",
    "lattice_point_count",
    "linear_witness",
    "lr_order_lt",
    "mat_mul",
    "mat_times_col",
    "mediant",
    "mersenne",
    "mersenne_gen",
    "mersenne_witness",
    "newman_step",
    "project_eisenstein_stern",
    "project_stern_brocot",
    "row_times_mat",
    "times",
    "tree_levels",
]
