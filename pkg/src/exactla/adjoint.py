"""Adjugate and determinant by recursive block factorization.

Let ``M`` be an ``m x m`` matrix whose entries are the order-``s+1`` bordered
minors of some matrix over the leading block with determinant ``d``
(``d = 1`` and ``M`` the input itself at the top level). The recursion
returns the matrix ``L = d**-(m-2) * adj(M)`` together with the last corner
minor ``delta``; they satisfy ``L @ M == d * delta * I`` and every entry of
``L`` lies in the domain.

Splitting ``M = [[A, C], [B, D]]`` with ``A`` of order ``h``::

    F, dt = recurse(A, d)                 # F @ A == d * dt * I
    X     = F C / d
    M'    = (dt D - B X) / d              # bordered minors over dt
    G, dn = recurse(M', dt)
    Y     = B F / d
    Z     = X G / dt
    W     = G Y / dt
    L     = [[(dn F + Z Y) / dt, -Z],
             [-W,                 G]]

Six block products per level; every division is exact.
"""
from __future__ import annotations

from dataclasses import dataclass

from .elimination import rank_profile
from .errors import NotSquare, SingularMatrix
from .matrix import (
    Matrix,
    OpCounter,
    add,
    apply_col_perm,
    apply_row_perm,
    div_exact,
    join_blocks,
    mat_mul,
    pad_to_pow2,
    scale,
    split_blocks,
    sub,
)


@dataclass
class AdjointResult:
    adjugate: Matrix
    det: object
    counter: OpCounter
    permuted: bool = False


class _ZeroMinor(Exception):
    pass


def _halve(m: int) -> int:
    return m // 2


def schur_update(delta, delta_prev, B: Matrix, F: Matrix, C: Matrix, D: Matrix, counter: OpCounter | None = None) -> Matrix:
    """Next matrix of bordered minors, ``(delta D - B (F C / delta_prev)) / delta_prev``.

    ``F`` is the scaled adjugate of the leading block ``A`` returned by the
    recursion, i.e. ``F @ A == delta_prev * delta * I``. With ``delta_prev = 1``
    this is ``delta D - B F C`` with ``F = adj(A)``.
    """
    return _schur(delta, delta_prev, B, F, C, D, counter)[0]


def _schur(delta, delta_prev, B, F, C, D, counter):
    X = div_exact(mat_mul(F, C, counter), delta_prev, counter)
    M2 = div_exact(sub(scale(delta, D, counter), mat_mul(B, X, counter)), delta_prev, counter)
    return M2, X


def assemble_factors(F: Matrix, G: Matrix, B: Matrix, C: Matrix, delta_prev, delta_t, delta_n,
                     counter: OpCounter | None = None) -> Matrix:
    """Multiply out the four block factors into the scaled adjugate.

    Arguments follow the recursion: ``F`` and ``G`` are the scaled adjugates
    of the leading block and of the Schur matrix, ``delta_t`` and ``delta_n``
    their corner minors.
    """
    X = div_exact(mat_mul(F, C, counter), delta_prev, counter)
    return _assemble(F, G, B, X, delta_prev, delta_t, delta_n, counter)


def _assemble(F, G, B, X, delta_prev, delta_t, delta_n, counter):
    Y = div_exact(mat_mul(B, F, counter), delta_prev, counter)
    Z = div_exact(mat_mul(X, G, counter), delta_t, counter)
    W = div_exact(mat_mul(G, Y, counter), delta_t, counter)
    TL = div_exact(add(scale(delta_n, F, counter), mat_mul(Z, Y, counter)), delta_t, counter)
    return join_blocks(TL, -Z, -W, G)


def scaled_adjoint(m: Matrix, delta_prev, counter: OpCounter | None = None, split=None, check: bool = False):
    """Return ``(L, delta)`` with ``L = delta_prev**-(m-2) adj(m)``.

    ``split(order)`` picks the size of the leading block at each level and
    defaults to halving. Raises :class:`SingularMatrix` when a corner minor
    met by the recursion is zero.
    """
    try:
        return _recurse(m, delta_prev, counter, split or _halve, check)
    except _ZeroMinor:
        raise SingularMatrix("zero corner minor") from None


def _recurse(M: Matrix, d, counter, split, check):
    dom = M.domain
    m = M.rows
    if m == 1:
        mu = M.data[0][0]
        if not mu:
            raise _ZeroMinor
        return Matrix._wrap(dom, [[d]], 1, 1), mu
    if m == 2:
        (a, b), (c, e) = M.data
        if counter is not None:
            counter.multiplications += 2
            counter.exact_divisions += 1
        delta = dom.exact_div(a * e - b * c, d)
        if not delta:
            raise _ZeroMinor
        return Matrix._wrap(dom, [[e, -b], [-c, a]], 2, 2), delta
    h = split(m)
    A, C, B, D = split_blocks(M, h, h)
    F, dt = _recurse(A, d, counter, split, check)
    if check:
        _check_frame(F, A, d * dt)
    M2, X = _schur(dt, d, B, F, C, D, counter)
    G, dn = _recurse(M2, dt, counter, split, check)
    if check:
        _check_frame(G, M2, dt * dn)
    return _assemble(F, G, B, X, d, dt, dn, counter), dn


def _check_frame(F, A, scalar):
    P = mat_mul(F, A)
    n = A.rows
    z = A.domain.zero
    for i in range(n):
        for j in range(n):
            want = scalar if i == j else z
            if P.data[i][j] != want:
                raise AssertionError("scaled adjugate identity violated in recursion frame")


def adjoint(a: Matrix, counter: OpCounter | None = None, check: bool = False) -> AdjointResult:
    """Adjugate and determinant of a nonsingular square matrix.

    The matrix is padded to a power-of-two order and split in halves. When a
    corner minor vanishes, rows and columns are first permuted so that all
    leading minors are nonzero, and the permutation is undone at the end via
    ``adj(A) = det(S) det(T) T adj(S A T) S``.
    """
    if not a.is_square():
        raise NotSquare(f"adjugate of a {a.rows}x{a.cols} matrix")
    if a.rows == 0:
        raise NotSquare("adjugate of an empty matrix")
    if counter is None:
        counter = OpCounter()
    dom = a.domain
    n = a.rows
    try:
        L, det = _recurse(pad_to_pow2(a), dom.one, counter, _halve, check)
        return AdjointResult(_top_left(L, n), det, counter.snapshot())
    except _ZeroMinor:
        pass
    r, S, T = rank_profile(a)
    if r < n:
        raise SingularMatrix(f"matrix of order {n} has rank {r}")
    ap = apply_col_perm(T, apply_row_perm(S, a))
    L, det = _recurse(pad_to_pow2(ap), dom.one, counter, _halve, check)
    Lp = _top_left(L, n).data
    sign = S.sign() * T.sign()
    out = [[None] * n for _ in range(n)]
    rp, cp = S.image, T.image
    for j in range(n):
        row = Lp[j]
        for i in range(n):
            v = row[i]
            out[cp[j]][rp[i]] = v if sign > 0 else -v
    if sign < 0:
        det = -det
    return AdjointResult(Matrix._wrap(dom, out, n, n), det, counter.snapshot(), True)


def _top_left(L: Matrix, n: int) -> Matrix:
    if L.rows == n:
        return L
    return Matrix._wrap(L.domain, [r[:n] for r in L.data[:n]], n, n)
