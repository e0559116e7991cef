"""Pure-Python hot loops. ``_ckernels.pyx`` compiles the same algorithms.

Matrices are lists of row lists. Entries only need ``+ - *`` and truthiness,
except where a function name says ``int`` or takes an explicit ``div``.
"""
from operator import mul

BACKEND = "python"


def matmul(a, b, zero):
    """Classical product of ``a`` (n x m) and ``b`` (m x k)."""
    if not a:
        return []
    if not b:
        return [[zero] * 0 for _ in a]
    cols = list(zip(*b))
    if not cols:
        return [[] for _ in a]
    return [[sum(map(mul, row, col), zero) for col in cols] for row in a]


def div_exact_int(a, d):
    """Entrywise exact division of an integer matrix by a nonzero int."""
    out = []
    for row in a:
        new = []
        for x in row:
            q, r = divmod(x, d)
            if r:
                raise ArithmeticError(f"{d} does not divide {x}")
            new.append(q)
        out.append(new)
    return out


def _int_div(a, b):
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def bareiss(work, div, max_steps=-1):
    """In-place fraction-free elimination with full pivoting.

    Pivot search is a row-major scan of the remaining block for the first
    nonzero entry. Returns ``(rank, row_perm, col_perm, minors, mults, divs)``;
    ``row_perm[i]`` is the original row now at position ``i``.
    """
    n = len(work)
    m = len(work[0]) if n else 0
    rperm = list(range(n))
    cperm = list(range(m))
    minors = []
    prev = None
    mults = divs = 0
    limit = min(n, m) if max_steps < 0 else min(n, m, max_steps)
    k = 0
    while k < limit:
        pi = pj = -1
        for i in range(k, n):
            row = work[i]
            for j in range(k, m):
                if row[j]:
                    pi, pj = i, j
                    break
            if pi >= 0:
                break
        if pi < 0:
            break
        if pi != k:
            work[k], work[pi] = work[pi], work[k]
            rperm[k], rperm[pi] = rperm[pi], rperm[k]
        if pj != k:
            for row in work:
                row[k], row[pj] = row[pj], row[k]
            cperm[k], cperm[pj] = cperm[pj], cperm[k]
        pivot_row = work[k]
        piv = pivot_row[k]
        for i in range(k + 1, n):
            row = work[i]
            lead = row[k]
            if prev is None:
                for j in range(k + 1, m):
                    row[j] = piv * row[j] - lead * pivot_row[j]
            else:
                for j in range(k + 1, m):
                    row[j] = div(piv * row[j] - lead * pivot_row[j], prev)
            row[k] = lead - lead
        cells = (n - k - 1) * (m - k - 1)
        mults += 2 * cells
        if prev is not None:
            divs += cells
        minors.append(piv)
        prev = piv
        k += 1
    return k, rperm, cperm, minors, mults, divs


def bareiss_int(work, max_steps=-1):
    return bareiss(work, _int_div, max_steps)


def inverse_mod(a, p):
    """Inverse of a square int matrix modulo prime ``p``, or ``None`` if singular."""
    n = len(a)
    aug = [[x % p for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    w = 2 * n
    for k in range(n):
        pi = -1
        for i in range(k, n):
            if aug[i][k]:
                pi = i
                break
        if pi < 0:
            return None
        aug[k], aug[pi] = aug[pi], aug[k]
        prow = aug[k]
        inv = pow(prow[k], -1, p)
        for j in range(k, w):
            prow[j] = prow[j] * inv % p
        for i in range(n):
            if i != k:
                row = aug[i]
                f = row[k]
                if f:
                    for j in range(k, w):
                        row[j] = (row[j] - f * prow[j]) % p
    return [row[n:] for row in aug]


def matvec_mod(a, v, p):
    return [sum(map(mul, row, v)) % p for row in a]


def lift_step_int(a, c, x, p):
    """Residual update ``(c - a x) / p``; raises if not exact."""
    out = []
    for row, ci in zip(a, c):
        q, r = divmod(ci - sum(map(mul, row, x)), p)
        if r:
            raise ArithmeticError("lifting residual not divisible by p")
        out.append(q)
    return out
