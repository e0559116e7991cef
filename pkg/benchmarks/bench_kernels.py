"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--json]

Each case is timed under both backends on identical inputs; the output lists
the best wall time per backend and the speedup.
"""
import argparse
import json
import random
import timeit

from exactla import kernels
from exactla.bench import random_matrix
from exactla.adjoint import adjoint
from exactla.padic import dixon_solve
from exactla.rings import ZZ, PolyRing


def _int_rows(rng, n, m, bound):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def cases(seed=0):
    rng = random.Random(seed)
    small_a, small_b = _int_rows(rng, 96, 96, 1000), _int_rows(rng, 96, 96, 1000)
    big_a, big_b = _int_rows(rng, 48, 48, 10**40), _int_rows(rng, 48, 48, 10**40)
    F = PolyRing(7)
    poly_a = [[F.random_element(rng, 3) for _ in range(24)] for _ in range(24)]
    poly_b = [[F.random_element(rng, 3) for _ in range(24)] for _ in range(24)]
    elim = _int_rows(rng, 40, 40, 100)
    adj_m = random_matrix(64, rng)
    sys_a = random_matrix(24, rng, 10**6)
    sys_c = [rng.randint(-10**6, 10**6) for _ in range(24)]
    return {
        "matmul int 96x96 |x|<=1e3": lambda: kernels.matmul(small_a, small_b, 0),
        "matmul int 48x48 |x|<=1e40": lambda: kernels.matmul(big_a, big_b, 0),
        "matmul GF(7)[x] 24x24": lambda: kernels.matmul(poly_a, poly_b, F.zero),
        "bareiss int 40x40": lambda: kernels.bareiss_int([r[:] for r in elim]),
        "adjoint int 64x64": lambda: adjoint(adj_m),
        "dixon int 24x24": lambda: dixon_solve(sys_a, sys_c, random.Random(1)),
    }


def run(repeat=5, seed=0):
    backends = kernels.available_backends()
    results = []
    previous = kernels.BACKEND
    try:
        for name, fn in cases(seed).items():
            row = {"case": name}
            for backend in backends:
                kernels.use_backend(backend)
                row[backend] = min(timeit.repeat(fn, number=1, repeat=repeat))
            if "cython" in row:
                row["speedup"] = row["python"] / row["cython"]
            results.append(row)
    finally:
        kernels.use_backend(previous)
    return results


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    results = run(args.repeat, args.seed)
    if args.json:
        print(json.dumps(results, indent=2))
        return
    if "cython" not in kernels.available_backends():
        print("compiled backend not built; timing the pure-Python kernels only")
    print(f"{'case':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in results:
        cy = f"{r['cython']:10.4f}" if "cython" in r else f"{'-':>10}"
        sp = f"{r['speedup']:8.2f}" if "speedup" in r else f"{'-':>8}"
        print(f"{r['case']:32} {r['python']:10.4f} {cy} {sp}")


if __name__ == "__main__":
    main()
