"""Exact linear algebra over the rationals.

Kernel bases are canonical: the spanning set produced by back
substitution is itself brought to reduced row echelon form, so equal
subspaces always yield identical bases.  The characteristic polynomial
is computed with the Faddeev-LeVerrier recurrence, which needs only
exact division by integers.
"""
from __future__ import annotations

from fractions import Fraction

from .polynomials import QPolynomial
from .rational import ONE, ZERO, QMatrix, QVector


def rref(matrix: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column indices."""
    rows = [list(r.entries) for r in matrix.rows]
    nrows = len(rows)
    ncols = matrix.ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return QMatrix(rows), tuple(pivots)


def rank(matrix: QMatrix) -> int:
    return len(rref(matrix)[1])


def row_space_basis(matrix: QMatrix) -> tuple[QVector, ...]:
    """RREF-canonical basis of the row space (no zero rows)."""
    reduced, pivots = rref(matrix)
    return tuple(reduced.rows[i] for i in range(len(pivots)))


def column_space_basis(matrix: QMatrix) -> tuple[QVector, ...]:
    """A basis of the column space: the pivot columns of the matrix."""
    _, pivots = rref(matrix)
    cols = matrix.transpose().rows
    return tuple(cols[j] for j in pivots)


def kernel_basis(matrix: QMatrix) -> tuple[QVector, ...]:
    """RREF-canonical basis of the null space {v : Mv = 0}.

    An empty tuple means the kernel is trivial.
    """
    reduced, pivots = rref(matrix)
    ncols = matrix.ncols
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for free in free_cols:
        v = [ZERO] * ncols
        v[free] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -reduced.rows[i][free]
        vectors.append(QVector(v))
    if not vectors:
        return ()
    return row_space_basis(QMatrix(vectors))


def solve(matrix: QMatrix, rhs: QVector) -> QVector | None:
    """One exact solution of Mx = b, or None when inconsistent."""
    if rhs.dim != matrix.nrows:
        raise ValueError("solve dimension mismatch")
    augmented = QMatrix(
        [list(row.entries) + [rhs[i]] for i, row in enumerate(matrix.rows)]
    )
    reduced, pivots = rref(augmented)
    ncols = matrix.ncols
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = reduced.rows[i][ncols]
    return QVector(x)


def char_poly(matrix: QMatrix) -> QPolynomial:
    """Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier."""
    if not matrix.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = matrix.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = matrix
    ck = ZERO
    for k in range(1, n + 1):
        if k > 1:
            mk = matrix.matmul(mk + QMatrix.identity(n).scale(ck))
        ck = -mk.trace() / k
        coeffs[n - k] = ck
    return QPolynomial(coeffs)


def poly_of_matrix(poly: QPolynomial, matrix: QMatrix) -> QMatrix:
    """Evaluate p(M) by Horner's scheme."""
    if not matrix.is_square():
        raise ValueError("polynomial of a non-square matrix")
    n = matrix.nrows
    result = QMatrix.zero(n, n)
    for c in reversed(poly.coeffs):
        result = matrix.matmul(result) + QMatrix.identity(n).scale(c)
    return result


def semisimple_check(matrix: QMatrix, factor: QPolynomial) -> bool:
    """True when the kernel of q(M) equals the kernel of q(M) squared.

    ``factor`` must divide the characteristic polynomial of M; the roots
    of q then carry no nontrivial Jordan structure exactly when the two
    kernels agree.
    """
    if factor.degree < 1:
        raise ValueError("factor must be non-constant")
    if not char_poly(matrix).divmod(factor)[1].is_zero():
        raise ValueError("factor does not divide the characteristic polynomial")
    qm = poly_of_matrix(factor, matrix)
    dim_first = matrix.nrows - rank(qm)
    dim_second = matrix.nrows - rank(qm.matmul(qm))
    return dim_first == dim_second


class DefectiveEigenvalueError(ValueError):
    """Eigenvalue 1 carries a nontrivial Jordan block, so no projection
    onto the fixed space along the range of (I - M) exists."""


def fix_projection(matrix: QMatrix) -> QMatrix:
    """Projection onto ker(I - M) along range(I - M).

    Returns the zero matrix when 1 is not an eigenvalue.  Raises
    DefectiveEigenvalueError when eigenvalue 1 is not semisimple.
    """
    if not matrix.is_square():
        raise ValueError("projection of a non-square matrix")
    n = matrix.nrows
    complement = QMatrix.identity(n) - matrix
    fixed = kernel_basis(complement)
    if not fixed:
        return QMatrix.zero(n, n)
    moving = column_space_basis(complement)
    columns = list(fixed) + list(moving)
    basis = QMatrix.from_columns(columns)
    if rank(basis) != n:
        raise DefectiveEigenvalueError(
            "eigenvalue 1 is defective: ker(I-M) meets range(I-M)"
        )
    k = len(fixed)
    selector = QMatrix(
        [
            [ONE if (i == j and i < k) else ZERO for j in range(n)]
            for i in range(n)
        ]
    )
    inverse = _invert(basis)
    return basis.matmul(selector).matmul(inverse)


def _invert(matrix: QMatrix) -> QMatrix:
    n = matrix.nrows
    augmented = QMatrix(
        [
            list(matrix.rows[i].entries)
            + [ONE if j == i else ZERO for j in range(n)]
            for i in range(n)
        ]
    )
    reduced, pivots = rref(augmented)
    if tuple(range(n)) != pivots[:n] or len(pivots) != n:
        raise ValueError("matrix is singular")
    return QMatrix([row.entries[n:] for row in reduced.rows])


def intersect_kernels(matrices: list[QMatrix]) -> tuple[QVector, ...]:
    """Canonical basis of the intersection of the kernels of the inputs."""
    if not matrices:
        raise ValueError("empty matrix list")
    ncols = matrices[0].ncols
    if any(m.ncols != ncols for m in matrices):
        raise ValueError("ambient dimension mismatch")
    stacked = QMatrix([row for m in matrices for row in m.rows])
    return kernel_basis(stacked)
