"""Fraction-free Gaussian elimination with exact divisions.

The one-step recurrence

    a[k][i,j] = (a[k-1][k,k] * a[k-1][i,j] - a[k-1][i,k] * a[k-1][k,j]) / a[k-2][k-1,k-1]

keeps every intermediate entry equal to a bordered minor of the (permuted)
input, so every division is exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import DimensionMismatch, NotSquare, SingularMatrix
from .matrix import Matrix, OpCounter, Permutation, apply_col_perm, apply_row_perm
from .rings import ZZ


@dataclass
class EliminationResult:
    rank: int
    row_perm: Permutation
    col_perm: Permutation
    minors: list
    reduced: Matrix

    @property
    def permuted_shape(self):
        return self.reduced.shape


def _run(domain, work, max_steps):
    if domain is ZZ:
        return kernels.bareiss_int(work, max_steps)
    return kernels.bareiss(work, domain.exact_div, max_steps)


def bareiss_eliminate(a: Matrix, counter: OpCounter | None = None, max_steps: int | None = None) -> EliminationResult:
    """Eliminate ``a`` with full pivoting.

    ``reduced`` is the working matrix after the last step performed: row
    ``k < rank`` holds the order-``k+1`` bordered minors of ``S a T`` along
    that row, and the trailing block below the last pivot holds the next
    bordered minors. With ``max_steps`` the elimination can be stopped early
    to inspect intermediate bordered minors.
    """
    work = a.copy_rows()
    steps = -1 if max_steps is None else max_steps
    try:
        r, rperm, cperm, minors, mults, divs = _run(a.domain, work, steps)
    except ArithmeticError as exc:
        from .errors import NotDivisible

        raise NotDivisible(f"inexact Bareiss step: {exc}") from None
    if counter is not None:
        counter.multiplications += mults
        counter.exact_divisions += divs
    reduced = Matrix._wrap(a.domain, work, a.rows, a.cols)
    return EliminationResult(r, Permutation(rperm), Permutation(cperm), minors, reduced)


def determinant(a: Matrix, counter: OpCounter | None = None):
    if not a.is_square():
        raise NotSquare(f"determinant of a {a.rows}x{a.cols} matrix")
    dom = a.domain
    if a.rows == 0:
        return dom.one
    res = bareiss_eliminate(a, counter)
    if res.rank < a.rows:
        return dom.zero
    det = res.minors[-1]
    return det if res.row_perm.sign() * res.col_perm.sign() == 1 else -det


def rank_profile(a: Matrix):
    """Return ``(r, S, T)`` such that ``S a T`` has nonzero leading minors up to order ``r``."""
    res = bareiss_eliminate(a)
    return res.rank, res.row_perm, res.col_perm


def rank(a: Matrix) -> int:
    return bareiss_eliminate(a).rank


def solve_fraction_free(a: Matrix, rhs: Matrix, counter: OpCounter | None = None):
    """Solve ``a X = rhs`` for square nonsingular ``a`` without fractions.

    Returns ``(N, d)`` with ``X = N / d`` where ``d = det(a)``; every entry of
    ``N`` is a Cramer numerator, so it lies in the domain.
    """
    if not a.is_square():
        raise NotSquare(f"system matrix is {a.rows}x{a.cols}")
    if rhs.rows != a.rows:
        raise DimensionMismatch("right-hand side has the wrong number of rows")
    n, k = a.rows, rhs.cols
    dom = a.domain
    if n == 0:
        return Matrix.zeros(dom, 0, k), dom.one
    r, S, T = rank_profile(a)
    if r < n:
        raise SingularMatrix("system matrix is singular")
    ap = apply_col_perm(T, apply_row_perm(S, a))
    rp = apply_row_perm(S, rhs)
    work = [ra + rb for ra, rb in zip(ap.data, rp.data)]
    res = bareiss_eliminate(Matrix._wrap(dom, work, n, n + k), counter)
    # leading minors of S a T are nonzero, so no pivoting happened
    assert res.col_perm.image[:n] == tuple(range(n)) and res.row_perm == Permutation.identity(n)
    U = res.reduced.data
    det = res.minors[-1]
    ed = dom.exact_div
    y = [[dom.zero] * k for _ in range(n)]
    mults = divs = 0
    for c in range(k):
        for i in range(n - 1, -1, -1):
            acc = det * U[i][n + c]
            row = U[i]
            for j in range(i + 1, n):
                acc = acc - row[j] * y[j][c]
            mults += n - i
            divs += 1
            y[i][c] = ed(acc, row[i])
    if counter is not None:
        counter.multiplications += mults
        counter.exact_divisions += divs
    x = [None] * n
    for j, orig in enumerate(T.image):
        x[orig] = y[j]
    sign = S.sign() * T.sign()
    if sign < 0:
        det = -det
        x = [[-v for v in row] for row in x]
    return Matrix._wrap(dom, x, n, k), det
