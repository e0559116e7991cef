"""Operation-count report for the binary-factorization adjugate."""
from __future__ import annotations

import random
import time

from .adjoint import adjoint
from .matrix import Matrix, OpCounter, next_pow2
from .rings import ZZ


def predicted_block_mults(n: int) -> int:
    """Ring multiplications spent in block products for order ``n = 2**p``.

    Evaluates ``sum_{k=0}^{p-2} 6 * 2**k * M(2**(p-k-1))`` with the classical
    ``M(q) = q**3``; the order-2 leaves use closed forms and no products.
    """
    p = n.bit_length() - 1
    if 1 << p != n:
        raise ValueError(f"{n} is not a power of two")
    return sum(6 * 2**k * (2 ** (p - k - 1)) ** 3 for k in range(p - 1))


def random_matrix(n: int, rng, bound: int = 9) -> Matrix:
    return Matrix(ZZ, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def bench_record(n: int, rng, bound: int = 9) -> dict:
    """Time one adjugate of a random order-``n`` integer matrix with nonzero corner minors."""
    while True:
        a = random_matrix(n, rng, bound)
        counter = OpCounter()
        t0 = time.perf_counter()
        res = adjoint(a, counter)
        seconds = time.perf_counter() - t0
        if not res.permuted:
            break
    size = next_pow2(n)
    predicted = predicted_block_mults(size)
    measured = counter.matmul_multiplications
    return {
        "n": n,
        "padded": size,
        "mults": measured,
        "divs": counter.exact_divisions,
        "scalings": counter.scalings,
        "total_mults": counter.multiplications,
        "predicted": predicted,
        "ratio": measured / predicted if predicted else 1.0,
        "mults_per_n3": measured / size**3,
        "seconds": seconds,
    }


def bench_report(sizes, seed: int = 0, allow_non_pow2: bool = False, bound: int = 9) -> dict:
    sizes = list(sizes)
    if not allow_non_pow2:
        bad = [n for n in sizes if n < 1 or n & (n - 1)]
        if bad:
            raise ValueError(f"sizes must be powers of two (use --pad to allow others): {bad}")
    from . import kernels

    rng = random.Random(seed)
    return {
        "algorithm": "binary-factorization adjugate",
        "backend": kernels.BACKEND,
        "seed": seed,
        "records": [bench_record(n, rng, bound) for n in sizes],
    }
