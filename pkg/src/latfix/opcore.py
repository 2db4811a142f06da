"""Positive matrix operators: norms, contractivity, power boundedness.

Supported norms are the sup norm, the l1 norm, and weighted l1 norms,
the lattice norms whose induced operator norms have exact closed forms.
The l1 family is strictly monotone (0 <= x < y forces a strictly
smaller norm); the sup norm is not.  Power boundedness is decided from
the characteristic polynomial: all roots strictly inside the unit disk,
or roots on the circle that are all semisimple.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactnum.linalg import char_poly, poly_of_matrix, rank
from .exactnum.polynomials import (
    DegreeBoundError,
    DiskVerdict,
    FactorSearchBudgetError,
    QPolynomial,
    unit_circle_root_count,
    unit_disk_verdict,
)
from .exactnum.rational import ONE, QMatrix, QVector


@dataclass(frozen=True)
class NormTag:
    """Identifies the lattice norm carried by an operator's space."""

    kind: str
    weights: QVector | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("sup", "one", "weighted_one"):
            raise ValueError(f"unknown norm kind {self.kind!r}")
        if self.kind == "weighted_one":
            if self.weights is None or self.weights.dim == 0:
                raise ValueError("weighted norm needs weights")
            if any(w <= 0 for w in self.weights):
                raise ValueError("norm weights must be strictly positive")
        elif self.weights is not None:
            raise ValueError("weights only apply to the weighted norm")

    @property
    def strictly_monotone(self) -> bool:
        return self.kind != "sup"


SUP_NORM = NormTag("sup")
ONE_NORM = NormTag("one")


def weighted_one_norm(weights: QVector) -> NormTag:
    return NormTag("weighted_one", weights)


def vector_norm(x: QVector, tag: NormTag) -> Fraction:
    if tag.kind == "sup":
        return x.sup_norm()
    if tag.kind == "one":
        return x.one_norm()
    assert tag.weights is not None
    if tag.weights.dim != x.dim:
        raise ValueError("weight dimension mismatch")
    return sum((w * abs(v) for w, v in zip(tag.weights, x)), Fraction(0))


@dataclass(frozen=True)
class PositiveMatrixOperator:
    matrix: QMatrix
    norm_tag: NormTag = SUP_NORM

    def __post_init__(self) -> None:
        if not self.matrix.is_square():
            raise ValueError("operator matrix must be square")
        if not self.matrix.is_nonneg():
            raise ValueError("operator matrix must be entrywise nonnegative")
        tag = self.norm_tag
        if tag.kind == "weighted_one" and tag.weights.dim != self.matrix.nrows:
            raise ValueError("norm weights must match the ambient dimension")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def apply(self, x: QVector) -> QVector:
        return self.matrix @ x

    def characteristic_polynomial(self) -> QPolynomial:
        return char_poly(self.matrix)


@dataclass(frozen=True)
class OperatorFamily:
    """Commuting positive operators on one space with one norm."""

    members: tuple[PositiveMatrixOperator, ...]

    def __init__(self, members: Iterable[PositiveMatrixOperator]) -> None:
        mem = tuple(members)
        if not mem:
            raise ValueError("empty operator family")
        dim = mem[0].dim
        tag = mem[0].norm_tag
        for op in mem[1:]:
            if op.dim != dim:
                raise ValueError("family members act on different spaces")
            if op.norm_tag != tag:
                raise ValueError("family members carry different norms")
        for i in range(len(mem)):
            for j in range(i + 1, len(mem)):
                a, b = mem[i].matrix, mem[j].matrix
                if a @ b != b @ a:
                    raise ValueError(
                        f"family members {i} and {j} do not commute"
                    )
        object.__setattr__(self, "members", mem)

    @property
    def dim(self) -> int:
        return self.members[0].dim

    @property
    def norm_tag(self) -> NormTag:
        return self.members[0].norm_tag


def operator_norm(op: PositiveMatrixOperator) -> Fraction:
    """Exact induced norm of the operator for its norm tag."""
    m = op.matrix
    n = m.nrows
    tag = op.norm_tag
    if tag.kind == "sup":
        if n == 0:
            return Fraction(0)
        return max(sum(map(abs, row), Fraction(0)) for row in m.rows)
    if tag.kind == "one":
        if n == 0:
            return Fraction(0)
        return max(
            sum((abs(m.entry(i, j)) for i in range(n)), Fraction(0))
            for j in range(n)
        )
    w = tag.weights
    assert w is not None
    return max(
        sum((w[i] * abs(m.entry(i, j)) for i in range(n)), Fraction(0)) / w[j]
        for j in range(n)
    )


def contraction_check(op: PositiveMatrixOperator) -> bool:
    return operator_norm(op) <= ONE


def super_fixed_check(op: PositiveMatrixOperator, g: QVector) -> bool:
    """Whether Tg >= g componentwise."""
    if g.dim != op.dim:
        raise ValueError("vector dimension mismatch")
    return op.apply(g).ge(g)


@dataclass(frozen=True)
class PowerBoundAnalysis:
    verdict: str
    offending_factor: QPolynomial | None
    reason: str


def power_bounded_analysis(op: PositiveMatrixOperator) -> PowerBoundAnalysis:
    """Power boundedness via the characteristic polynomial.

    Yes: no root outside the closed unit disk and every boundary factor
    semisimple.  No: a root outside, or a defective wholly-on-circle
    factor.  Unknown: a repeated irreducible factor straddles the circle
    and the joint semisimplicity test fails (the defect cannot be
    attributed to an on-circle root without factoring over extensions),
    or the factor search gives out.
    """
    p = char_poly(op.matrix)
    verdict = unit_disk_verdict(p)
    if verdict == DiskVerdict.SOME_OUTSIDE:
        return PowerBoundAnalysis("No", None, "a root lies outside the unit disk")
    if verdict == DiskVerdict.ALL_STRICTLY_INSIDE:
        return PowerBoundAnalysis("Yes", None, "all roots strictly inside")
    try:
        boundary = unit_circle_root_count(p)
    except (DegreeBoundError, FactorSearchBudgetError):
        return PowerBoundAnalysis(
            "Unknown", None, "boundary factorization out of reach"
        )
    for factor, mult in boundary.boundary_factors:
        if mult == 1:
            continue
        if not _factor_semisimple(op.matrix, factor):
            return PowerBoundAnalysis(
                "No",
                factor,
                "a repeated boundary factor is defective",
            )
    if boundary.mixed:
        for factor, mult in boundary.mixed_factors:
            if mult == 1:
                continue
            if not _factor_semisimple(op.matrix, factor):
                return PowerBoundAnalysis(
                    "Unknown",
                    factor,
                    "cannot attribute the defect of a straddling factor",
                )
    return PowerBoundAnalysis("Yes", None, "boundary roots all semisimple")


def _factor_semisimple(m: QMatrix, factor: QPolynomial) -> bool:
    value = poly_of_matrix(factor, m)
    return rank(value) == rank(value @ value)


def power_bounded_verdict(op: PositiveMatrixOperator) -> str:
    """One of "Yes", "No", "Unknown"."""
    return power_bounded_analysis(op).verdict
