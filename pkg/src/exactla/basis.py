"""Basis sets of solutions of ``A x = c`` over the field of fractions.

A homogeneous system of rank ``r`` in ``m`` unknowns gets ``m - r`` linearly
independent solutions, a consistent nonhomogeneous one ``m - r + 1``; every
solution is then a (affine, for ``c != 0``) combination of the basis.

Both constructions permute a nonsingular ``r x r`` block ``A0`` into the
upper-left corner of ``S A T`` and reduce everything to determined systems
with matrix ``A0``. Solutions are kept as numerator vectors over
``det(A0)`` until the basis vectors are emitted in lowest terms.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .adjoint import adjoint
from .elimination import bareiss_eliminate, solve_fraction_free
from .errors import DimensionMismatch, InconsistentSystem, ZeroRHS
from .matrix import Matrix, OpCounter, Permutation, apply_col_perm, apply_row_perm, matvec
from .padic import DixonSolver
from .rings import ZZ

METHODS = ("auto", "adjoint", "bareiss", "dixon")
HOMOGENEOUS = "homogeneous"
NONHOMOGENEOUS = "nonhomogeneous"


@dataclass
class SystemInstance:
    A: Matrix
    c: list

    def __post_init__(self):
        self.c = list(self.c)
        if len(self.c) != self.A.rows:
            raise DimensionMismatch(f"matrix has {self.A.rows} rows but c has {len(self.c)} entries")

    @property
    def domain(self):
        return self.A.domain

    @property
    def n(self):
        return self.A.rows

    @property
    def m(self):
        return self.A.cols

    def is_homogeneous(self):
        return not any(self.c)


@dataclass
class Consistency:
    consistent: bool
    rank: int
    augmented_rank: int


@dataclass
class RationalBasis:
    """Basis vectors stored as ``(numerators, denominator)`` pairs in lowest terms."""

    kind: str
    vectors: list
    rank: int
    row_perm: Permutation
    col_perm: Permutation
    pivot_swap: Permutation | None = None
    domain: object = field(default=ZZ, repr=False)

    def __len__(self):
        return len(self.vectors)

    def denominators(self):
        return [chi for _, chi in self.vectors]

    def fractions(self):
        dom = self.domain
        return [[dom.fraction(x, chi) for x in xs] for xs, chi in self.vectors]


def consistency_check(system: SystemInstance) -> Consistency:
    """Compare ``rank A`` with ``rank (A | c)``."""
    r = bareiss_eliminate(system.A).rank
    aug = Matrix._wrap(system.domain, [row + [ci] for row, ci in zip(system.A.data, system.c)], system.n, system.m + 1)
    ra = bareiss_eliminate(aug).rank
    return Consistency(r == ra, r, ra)


def reduce_vector(domain, xs, chi):
    """Divide ``(xs, chi)`` by their common gcd and normalize ``chi``."""
    g = chi
    for x in xs:
        if domain.is_unit(g):
            break
        if x:
            g = domain.gcd(g, x)
    ed = domain.exact_div
    _, unit = domain.canonical(g)
    g = ed(g, unit) if not domain.is_unit(g) else domain.one
    if g != domain.one:
        xs = [ed(x, g) for x in xs]
        chi = ed(chi, g)
    chi_c, unit = domain.canonical(chi)
    if unit != domain.one:
        xs = [ed(x, unit) for x in xs]
    return xs, chi_c


class _Reduction:
    """``S A T`` split around its nonsingular corner ``A0``."""

    def __init__(self, system: SystemInstance, counter):
        res = bareiss_eliminate(system.A, counter)
        self.rank = r = res.rank
        self.S, self.T = res.row_perm, res.col_perm
        sat = apply_col_perm(self.T, apply_row_perm(self.S, system.A))
        self.A0 = Matrix._wrap(system.domain, [row[:r] for row in sat.data[:r]], r, r)
        self.A1 = [row[r:] for row in sat.data[:r]]
        self.c0 = [system.c[i] for i in self.S.image[:r]]
        self.det = res.minors[r - 1] if r else system.domain.one


def _choose_method(domain, r, method):
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method == "auto":
        return "dixon" if domain is ZZ and r > 8 else "adjoint"
    return method


def _solve_columns(red: _Reduction, rhs, method, rng, counter):
    """Numerators ``N_j`` with ``A0 (N_j / det A0) = rhs_j`` for each column."""
    A0, det = red.A0, red.det
    dom = A0.domain
    if not rhs:
        return []
    if red.rank == 0:
        return [[] for _ in rhs]
    method = _choose_method(dom, red.rank, method)
    if method == "adjoint":
        res = adjoint(A0, counter)
        assert res.det == det
        return [matvec(res.adjugate, v, counter) for v in rhs]
    if method == "bareiss":
        rhs_m = Matrix._wrap(dom, [list(row) for row in zip(*rhs)], red.rank, len(rhs))
        N, d = solve_fraction_free(A0, rhs_m, counter)
        assert d == det
        return [N.col(j) for j in range(len(rhs))]
    solver = DixonSolver(A0, rng if rng is not None else random.Random(0), counter)
    out = []
    for v in rhs:
        x = solver.solve(v)
        out.append([dom.exact_div(q.numerator * det, q.denominator) for q in x])
    return out


def _unpermute(T: Permutation, z):
    x = [None] * len(z)
    for j, orig in enumerate(T.image):
        x[orig] = z[j]
    return x


def basis_homogeneous(system: SystemInstance, method: str = "auto", rng=None, counter: OpCounter | None = None) -> RationalBasis:
    """Basis of ``A x = 0``: solve ``A0 x_j = -a_j`` and append unit vectors.

    For full column rank the basis is empty (the only solution is zero).
    """
    if counter is None:
        counter = OpCounter()
    dom = system.domain
    red = _Reduction(system, counter)
    r, m = red.rank, system.m
    cols = [[-row[j] for row in red.A1] for j in range(m - r)]
    nums = _solve_columns(red, cols, method, rng, counter)
    vectors = []
    for j, num in enumerate(nums):
        tail = [dom.zero] * (m - r)
        tail[j] = red.det
        xs = _unpermute(red.T, list(num) + tail)
        vectors.append(reduce_vector(dom, xs, red.det))
    return RationalBasis(HOMOGENEOUS, vectors, r, red.S, red.T, None, dom)


def basis_nonhomogeneous(system: SystemInstance, method: str = "auto", rng=None, counter: OpCounter | None = None) -> RationalBasis:
    """Basis of a consistent system with ``c != 0``.

    With ``b = A0^-1 c0`` and ``B = A0^-1 A1`` (rows swapped by ``P`` so that
    the last entry ``beta`` of ``b`` is nonzero) the vectors are, in the
    coordinates of ``S A T`` after ``P``::

        (b', beta, 0, ..., 0)
        (b' - xi_j b'_j, [xi_j if j in J else 0], xi_j e_j)   j = 1..m-r

    where ``J`` holds the columns of ``B`` whose last entry is zero,
    ``xi_j = beta / beta_j`` outside ``J`` and ``xi_j = beta`` inside it.
    """
    if counter is None:
        counter = OpCounter()
    dom = system.domain
    if system.is_homogeneous():
        raise ZeroRHS("right-hand side is zero; use basis_homogeneous")
    cons = consistency_check(system)
    if not cons.consistent:
        raise InconsistentSystem(f"rank A = {cons.rank} but rank (A|c) = {cons.augmented_rank}")
    red = _Reduction(system, counter)
    r, m = red.rank, system.m
    delta = red.det
    cols = [list(red.c0)] + [[row[j] for row in red.A1] for j in range(m - r)]
    nums = _solve_columns(red, cols, method, rng, counter)
    bn, Bn = nums[0], nums[1:]
    k = max(i for i in range(r) if bn[i])
    P = Permutation.transposition(r, k, r - 1)
    bn = [bn[i] for i in P.image]
    Bn = [[col[i] for i in P.image] for col in Bn]
    beta = bn[-1]
    zero = dom.zero

    def emit(top, tail, den):
        z = [top[i] for i in P.image] + tail
        return reduce_vector(dom, _unpermute(red.T, z), den)

    vectors = [emit(bn, [zero] * (m - r), delta)]
    for j, col in enumerate(Bn):
        beta_j = col[-1]
        tail = [zero] * (m - r)
        tail[j] = beta * delta
        if beta_j:
            top = [x * beta_j - beta * y for x, y in zip(bn[:-1], col[:-1])] + [zero]
            den = delta * beta_j
        else:
            top = [x * delta - beta * y for x, y in zip(bn[:-1], col[:-1])] + [beta * delta]
            den = delta * delta
        assert tail[j], "xi_j vanished"
        vectors.append(emit(top, tail, den))
    return RationalBasis(NONHOMOGENEOUS, vectors, r, red.S, red.T, P, dom)


def rational_basis(system: SystemInstance, method: str = "auto", rng=None, counter: OpCounter | None = None) -> RationalBasis:
    """Dispatch on ``c``; raises :class:`InconsistentSystem` when there is no solution."""
    if system.is_homogeneous():
        return basis_homogeneous(system, method, rng, counter)
    return basis_nonhomogeneous(system, method, rng, counter)


def solves(system: SystemInstance, xs, chi) -> bool:
    if not chi:
        return False
    for row, ci in zip(system.A.data, system.c):
        acc = system.domain.zero
        for a, x in zip(row, xs):
            acc = acc + a * x
        if acc != ci * chi:
            return False
    return True


def verify_basis(system: SystemInstance, basis: RationalBasis) -> bool:
    """True iff ``basis`` is a complete, independent set of exact solutions."""
    cons = consistency_check(system)
    if not cons.consistent:
        return False
    homog = system.is_homogeneous()
    expected = system.m - cons.rank + (0 if homog else 1)
    if len(basis.vectors) != expected:
        return False
    for xs, chi in basis.vectors:
        if len(xs) != system.m or not solves(system, xs, chi):
            return False
    if not basis.vectors:
        return True
    stacked = Matrix(system.domain, [xs for xs, _ in basis.vectors], system.m)
    return bareiss_eliminate(stacked).rank == expected
