"""Determined systems by linear p-adic lifting and rational reconstruction.

For integers the prime is a random word-sized prime ``p``; for GF(q)[x] it is
a linear polynomial ``x - a``, so that residues are evaluations at ``a`` and
lifting is a Taylor expansion around ``a``.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import kernels
from .errors import (
    DimensionMismatch,
    ExhaustedCandidates,
    NoReconstruction,
    NotSquare,
    RetryLimit,
    SingularMatrix,
)
from .matrix import Matrix, OpCounter
from .rings import ZZ, Poly, PolyFraction, PolyRing

MAX_PRIMES = 8


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def _row_bound(rows, domain) -> int:
    if domain is ZZ:
        bound = 1
        for row in rows:
            bound *= _ceil_sqrt(sum(x * x for x in row))
        return bound
    return sum(max((x.degree for x in row), default=0) if any(row) else 0 for row in rows)


def hadamard_bound(a: Matrix) -> int:
    """Upper bound on ``|det a|`` (integers) or ``deg det a`` (polynomials).

    Integers: product over rows of the ceiling of the row's Euclidean norm.
    Polynomials: sum over rows of the largest entry degree.
    """
    if not a.is_square():
        raise NotSquare(f"Hadamard bound of a {a.rows}x{a.cols} matrix")
    return _row_bound(a.data, a.domain)


def rational_reconstruct(u, M, domain=ZZ, num_bound=None, den_bound=None):
    """Recover ``n/d`` from ``u = n d^-1 mod M``.

    Integers: ``|n| <= num_bound``, ``0 < d <= den_bound``, both defaulting to
    ``floor(sqrt(M/2))``. Polynomials: the bounds are degrees and default to
    ``(deg M - 1) // 2``. Raises :class:`NoReconstruction` when no fraction
    within the bounds exists.
    """
    if domain is ZZ:
        return _reconstruct_int(u, M, num_bound, den_bound)
    return _reconstruct_poly(u, M, num_bound, den_bound)


def _reconstruct_int(u, M, N, D):
    from fractions import Fraction

    if M <= 0:
        raise ValueError("modulus must be positive")
    if N is None:
        N = math.isqrt(M // 2)
    if D is None:
        D = math.isqrt(M // 2)
    r0, r1 = M, u % M
    t0, t1 = 0, 1
    while r1 > N:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 < 0:
        r1, t1 = -r1, -t1
    if t1 == 0 or t1 > D or math.gcd(t1, M) != 1:
        raise NoReconstruction(f"no fraction with bounds ({N}, {D}) matches {u} mod {M}")
    return Fraction(r1, t1)


def _reconstruct_poly(u: Poly, M: Poly, N, D):
    if M.degree < 1:
        raise ValueError("modulus must have positive degree")
    if N is None:
        N = (M.degree - 1) // 2
    if D is None:
        D = (M.degree - 1) // 2
    p = M.p
    r0, r1 = M, u.divmod(M)[1]
    t0, t1 = Poly((), p), Poly((1,), p)
    while r1.degree > N:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if not t1 or t1.degree > D:
        raise NoReconstruction("no rational function within the degree bounds")
    g = t1
    h = M
    while h:
        g, h = h, g.divmod(h)[1]
    if g.degree != 0:
        raise NoReconstruction("denominator shares a factor with the modulus")
    return PolyFraction(r1, t1)


@dataclass
class LiftingContext:
    """Prime, inverse modulo the prime, and lifting precision of one solve."""

    prime: object
    inverse: list
    steps: int = 0
    modulus: object = None


class DixonSolver:
    """Reusable lifting solver for one nonsingular square matrix.

    Picks a prime element not dividing ``det(a)`` and stores ``a^-1`` modulo
    it; :meth:`solve` then lifts any number of right-hand sides.
    """

    def __init__(self, a: Matrix, rng=None, counter: OpCounter | None = None, prime_bits: int = 62):
        if not a.is_square():
            raise NotSquare(f"system matrix is {a.rows}x{a.cols}")
        self.a = a
        self.domain = a.domain
        self.rng = rng if rng is not None else random.Random(0)
        self.counter = counter
        self.prime_bits = prime_bits
        self._rejected = set()
        self.attempts = 0
        self.context = self._new_context()

    def _new_context(self) -> LiftingContext:
        dom = self.domain
        n = self.a.rows
        while self.attempts < MAX_PRIMES:
            self.attempts += 1
            if dom is ZZ:
                try:
                    p = dom.random_prime(self.rng, self.prime_bits, exclude=self._rejected)
                except ExhaustedCandidates:
                    break
                key, modp, rows = p, p, self.a.data
            elif isinstance(dom, PolyRing):
                try:
                    p = dom.random_prime(self.rng, exclude=self._rejected)
                except ExhaustedCandidates:
                    break
                key = (-p.coeffs[0]) % dom.p
                modp = dom.p
                rows = [[x(key) for x in row] for row in self.a.data]
            else:
                raise TypeError(f"lifting is not available over {dom!r}")
            inv = kernels.inverse_mod(rows, modp) if n else []
            if self.counter is not None:
                self.counter.multiplications += n * n * n
            if inv is not None:
                return LiftingContext(p, inv)
            self._rejected.add(key)
        from .elimination import determinant

        if not determinant(self.a):
            raise SingularMatrix("system matrix is singular")
        raise RetryLimit(f"no suitable prime element after {self.attempts} attempts")

    def _retry(self):
        key = self.context.prime if self.domain is ZZ else (-self.context.prime.coeffs[0]) % self.domain.p
        self._rejected.add(key)
        self.context = self._new_context()

    def solve(self, c):
        """Return the exact solution of ``a x = c`` as a list of reduced fractions."""
        c = list(c)
        if len(c) != self.a.rows:
            raise DimensionMismatch("right-hand side has the wrong length")
        while True:
            try:
                x = self._lift(c)
            except NoReconstruction:
                x = None
            if x is not None and self._verify(x, c):
                return x
            if self.attempts >= MAX_PRIMES:
                raise RetryLimit("lifting did not produce a verified solution")
            self._retry()

    def _lift(self, c):
        if self.domain is ZZ:
            return self._lift_int(c)
        return self._lift_poly(c)

    def _lift_int(self, c):
        a = self.a.data
        n = len(a)
        ctx = self.context
        p = ctx.prime
        H = _row_bound([row + [ci] for row, ci in zip(a, c)], ZZ)
        target = 2 * H * H
        k, pk = 0, 1
        while pk <= target:
            pk *= p
            k += 1
        k += 1
        ctx.steps = k
        acc = [0] * n
        scale = 1
        ci = c
        for _ in range(k):
            xi = kernels.matvec_mod(ctx.inverse, ci, p)
            ci = kernels.lift_step_int(a, ci, xi, p)
            acc = [s + t * scale for s, t in zip(acc, xi)]
            scale *= p
        ctx.modulus = scale
        if self.counter is not None:
            self.counter.multiplications += 2 * k * n * n
            self.counter.exact_divisions += k * n
        return [_reconstruct_int(v, scale, None, None) for v in acc]

    def _lift_poly(self, c):
        dom = self.domain
        a = self.a.data
        n = len(a)
        ctx = self.context
        q = dom.p
        point = (-ctx.prime.coeffs[0]) % q
        Hd = _row_bound([row + [ci] for row, ci in zip(a, c)], dom)
        k = 2 * Hd + 2
        ctx.steps = k
        ci = list(c)
        acc = [dom.zero] * n
        power = dom.one
        for _ in range(k):
            xi = kernels.matvec_mod(ctx.inverse, [v(point) for v in ci], q)
            nxt = []
            for row, v in zip(a, ci):
                r = v
                for x, t in zip(row, xi):
                    if t:
                        r = r - x * t
                nxt.append(dom.exact_div(r, ctx.prime))
            ci = nxt
            acc = [s + power * t for s, t in zip(acc, xi)]
            power = power * ctx.prime
        ctx.modulus = power
        if self.counter is not None:
            self.counter.multiplications += 2 * k * n * n
            self.counter.exact_divisions += k * n
        return [_reconstruct_poly(v, power, Hd, Hd) for v in acc]

    def _verify(self, x, c) -> bool:
        dom = self.domain
        den = dom.lcm_many([v.denominator for v in x]) if x else dom.one
        num = [dom.exact_div(v.numerator * den, v.denominator) for v in x]
        for row, ci in zip(self.a.data, c):
            acc = dom.zero
            for aij, xj in zip(row, num):
                acc = acc + aij * xj
            if acc != ci * den:
                return False
        return True


def dixon_solve(a: Matrix, c, rng=None, counter: OpCounter | None = None, prime_bits: int = 62):
    """Solve the nonsingular system ``a x = c``; returns a list of reduced fractions."""
    return DixonSolver(a, rng, counter, prime_bits).solve(c)
