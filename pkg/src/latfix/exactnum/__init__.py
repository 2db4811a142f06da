"""Exact rational linear algebra and polynomial analysis.

Scalars are arbitrary-precision rationals; no certified code path ever
touches floating point.  Kernel bases are canonicalized by reduced row
echelon form so that equal subspaces produce byte-identical bases.
"""
from .linalg import (
    DefectiveEigenvalueError,
    char_poly,
    column_space_basis,
    fix_projection,
    intersect_kernels,
    kernel_basis,
    poly_of_matrix,
    rank,
    row_space_basis,
    rref,
    semisimple_check,
    solve,
)
from .polynomials import (
    DEGREE_BOUND,
    BoundaryAnalysis,
    DegreeBoundError,
    DiskVerdict,
    FactoredPolynomial,
    FactorSearchBudgetError,
    QPolynomial,
    cauchy_index,
    cyclotomic,
    cyclotomic_order,
    euler_phi,
    factor_over_rationals,
    orders_with_phi_at_most,
    poly_gcd,
    squarefree_decomposition,
    sturm_count,
    unit_circle_root_count,
    unit_disk_verdict,
)
from .rational import ONE, ZERO, QMatrix, QVector, Rational, rat, rat_str

__all__ = [
    "DEGREE_BOUND",
    "BoundaryAnalysis",
    "DefectiveEigenvalueError",
    "DegreeBoundError",
    "DiskVerdict",
    "FactoredPolynomial",
    "FactorSearchBudgetError",
    "ONE",
    "QMatrix",
    "QPolynomial",
    "QVector",
    "Rational",
    "ZERO",
    "cauchy_index",
    "char_poly",
    "column_space_basis",
    "cyclotomic",
    "cyclotomic_order",
    "euler_phi",
    "factor_over_rationals",
    "fix_projection",
    "intersect_kernels",
    "kernel_basis",
    "orders_with_phi_at_most",
    "poly_gcd",
    "poly_of_matrix",
    "rank",
    "rat",
    "rat_str",
    "row_space_basis",
    "rref",
    "semisimple_check",
    "solve",
    "squarefree_decomposition",
    "sturm_count",
    "unit_circle_root_count",
    "unit_disk_verdict",
]
