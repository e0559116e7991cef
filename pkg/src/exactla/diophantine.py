"""Solutions of ``A x = c`` lying in the domain itself (Euclidean domains).

Given a rational basis ``x_i = xbar_i / chi_i`` of a nonhomogeneous system,
any ``q`` with ``<chi, q> = 1`` yields the integral solution ``<xbar, q>``.
Such ``q`` exists iff the denominators generate the unit ideal, which is
decided by a chained extended GCD. When it fails the rational basis is
recomputed under fresh random row and column permutations.
"""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field

from .basis import (
    NONHOMOGENEOUS,
    SystemInstance,
    consistency_check,
    rational_basis,
    solves,
)
from .errors import InconsistentSystem, PreconditionViolated, WitnessInvalid
from .matrix import Matrix, Permutation, apply_col_perm, apply_row_perm, permute_vector
from .rings import ZZ

log = logging.getLogger(__name__)


@dataclass
class UnitWitness:
    q: list


@dataclass
class NotUnit:
    gcd: object


@dataclass
class DiophantineBasis:
    vectors: list
    kind: str = NONHOMOGENEOUS
    iterations: int = 0


@dataclass
class NoSolution:
    reason: str = ""


@dataclass
class Inconclusive:
    iterations: int = 0
    denominators: list = field(default_factory=list)


def denominator(x, domain=ZZ):
    """Split a vector of reduced fractions into ``(xbar, chi)`` with ``chi`` the lcm of denominators."""
    if not x:
        return [], domain.one
    chi = domain.lcm_many([v.denominator for v in x])
    ed = domain.exact_div
    return [v.numerator * ed(chi, v.denominator) for v in x], chi


def unit_ideal_witness(chis, domain=ZZ):
    """Coefficients ``q`` with ``sum(chi_i q_i) == 1``, or :class:`NotUnit` with the gcd."""
    chis = list(chis)
    if not chis:
        return NotUnit(domain.zero)
    g, u, _ = domain.gcd_ext(chis[0], domain.zero)
    q = [u]
    for chi in chis[1:]:
        g, u, v = domain.gcd_ext(g, chi)
        q = [u * qi for qi in q] + [v]
    if g != domain.one:
        return NotUnit(g)
    return UnitWitness(q)


def _dot(domain, chis, q):
    acc = domain.zero
    for a, b in zip(chis, q):
        acc = acc + a * b
    return acc


def diophantine_solution(vectors, q, domain=ZZ):
    """``<xbar, q>`` for basis pairs ``(xbar_i, chi_i)``; requires ``<chi, q> = 1``."""
    chis = [chi for _, chi in vectors]
    if len(q) != len(vectors) or _dot(domain, chis, q) != domain.one:
        raise WitnessInvalid("<chi, q> != 1")
    m = len(vectors[0][0])
    z = [domain.zero] * m
    for (xs, _), qi in zip(vectors, q):
        if qi:
            z = [a + qi * b for a, b in zip(z, xs)]
    return z


def diophantine_basis(vectors, domain=ZZ) -> DiophantineBasis:
    """Turn a rational basis whose first denominator is 1 into an integral one.

    Emits ``xbar_1`` and ``xbar_i - xbar_1 (chi_i - 1)`` for ``i >= 2``.
    """
    if not vectors:
        return DiophantineBasis([])
    x1, chi1 = vectors[0]
    if chi1 != domain.one:
        raise PreconditionViolated("first basis vector must have denominator 1")
    out = [list(x1)]
    for xs, chi in vectors[1:]:
        f = chi - domain.one
        out.append([a - b * f for a, b in zip(xs, x1)])
    return DiophantineBasis(out)


def substitute_solution(vectors, q, domain=ZZ):
    """Replace the first ``x_s`` with ``q_s != 0`` by ``<xbar, q>`` and move it to the front."""
    z = diophantine_solution(vectors, q, domain)
    s = next(i for i, qi in enumerate(q) if qi)
    rest = [v for i, v in enumerate(vectors) if i != s]
    return [(z, domain.one)] + rest


def _max_norm(system: SystemInstance) -> int:
    dom = system.domain
    vals = [dom.norm(x) for row in system.A.data for x in row if x] + [dom.norm(x) for x in system.c if x]
    return max(vals, default=0)


def default_max_iters(system: SystemInstance, rank: int) -> int:
    n = max(system.n, 1)
    h = system.m - rank + 1
    est = 4 * (math.log(n) + math.log(math.log(_max_norm(system) + 16))) / h
    return max(4, math.ceil(est) + 4)


def _basis_under(system, row_p, col_p, method, rng):
    A = apply_col_perm(col_p, apply_row_perm(row_p, system.A))
    permuted = SystemInstance(A, permute_vector(row_p, system.c))
    b = rational_basis(permuted, method, rng)
    vectors = []
    for xs, chi in b.vectors:
        x = [None] * len(xs)
        for j, orig in enumerate(col_p.image):
            x[orig] = xs[j]
        vectors.append((x, chi))
    return vectors, b.rank


def _substitute_pooled(vectors, z, domain):
    """Put the integral solution ``z`` in place of the first basis vector it can replace."""
    for s in range(len(vectors)):
        rest = [v for i, v in enumerate(vectors) if i != s]
        if independent([z] + [xs for xs, _ in rest], domain):
            return [(z, domain.one)] + rest
    raise AssertionError("integral solution lies in the span of every reduced basis")


def solve_diophantine(system: SystemInstance, rng=None, max_iters: int | None = None, method: str = "auto",
                      pool: bool = True):
    """Diophantine basis, or :class:`NoSolution` / :class:`Inconclusive`.

    Homogeneous systems always succeed by clearing denominators. A
    nonhomogeneous system of full column rank is decided exactly; otherwise
    the randomized loop may end :class:`Inconclusive` after ``max_iters``
    rational bases. Raises :class:`InconsistentSystem` when ``A x = c`` has no
    solution at all.

    Each iteration first looks for a witness among the denominators of its own
    basis. With ``pool`` (the default) it then also tries the denominators of
    every basis vector seen so far: any such family of solutions with
    ``<chi, q> = 1`` still gives the integral solution ``<xbar, q>``, which then
    replaces one vector of the current basis.
    """
    if rng is None:
        rng = random.Random(0)
    dom = system.domain
    cons = consistency_check(system)
    if not cons.consistent:
        raise InconsistentSystem(f"rank A = {cons.rank} but rank (A|c) = {cons.augmented_rank}")
    n, m, r = system.n, system.m, cons.rank
    if system.is_homogeneous():
        b = rational_basis(system, method, rng)
        return DiophantineBasis([list(xs) for xs, _ in b.vectors], b.kind, 1)
    if r == m:
        b = rational_basis(system, method, rng)
        (xs, chi), = b.vectors
        if not dom.is_unit(chi):
            return NoSolution("unique rational solution is not integral")
        return DiophantineBasis([[dom.exact_div(x, chi) for x in xs]], NONHOMOGENEOUS, 1)
    if max_iters is None:
        max_iters = default_max_iters(system, r)
    seen = []
    pooled = []
    for it in range(1, max_iters + 1):
        row_p, col_p = Permutation.random(n, rng), Permutation.random(m, rng)
        log.debug("iteration %d: row perm %s, column perm %s", it, row_p.image, col_p.image)
        vectors, _ = _basis_under(system, row_p, col_p, method, rng)
        chis = [chi for _, chi in vectors]
        seen.append(chis)
        pooled.extend(vectors)
        w = unit_ideal_witness(chis, dom)
        if isinstance(w, UnitWitness):
            reduced = substitute_solution(vectors, w.q, dom)
        elif pool and it > 1 and isinstance(w2 := unit_ideal_witness([chi for _, chi in pooled], dom), UnitWitness):
            reduced = _substitute_pooled(vectors, diophantine_solution(pooled, w2.q, dom), dom)
        else:
            log.debug("denominators %s generate (%s)", chis, w.gcd)
            continue
        result = diophantine_basis(reduced, dom)
        result.iterations = it
        for xs in result.vectors:
            if not solves(system, xs, dom.one):
                raise AssertionError("Diophantine basis vector does not solve the system")
        return result
    return Inconclusive(max_iters, seen)


def independent(vectors, domain=ZZ) -> bool:
    from .elimination import bareiss_eliminate

    if not vectors:
        return True
    return bareiss_eliminate(Matrix(domain, vectors, len(vectors[0]))).rank == len(vectors)
