# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_pykernels``.

Entries stay Python objects (arbitrary-precision ints or polynomials) and
the loops gain from typed indices. Integer products whose entries are small
enough for 64-bit accumulation run on machine words instead.
"""

from libc.stdlib cimport calloc, free, malloc

BACKEND = "cython"


cdef bint _fill_small(list rows, long long *dst, Py_ssize_t ncols, long long bound):
    """Copy int entries with ``|x| <= bound`` into ``dst``; False on anything else."""
    cdef Py_ssize_t i = 0, j
    cdef long long v
    cdef list row
    for row in rows:
        for j in range(ncols):
            x = row[j]
            if type(x) is not int:
                return False
            if x > bound or x < -bound:
                return False
            v = x
            dst[i * ncols + j] = v
        i += 1
    return True


cdef list _matmul_small(list a, list b, Py_ssize_t n, Py_ssize_t m, Py_ssize_t k):
    # entries bounded so that every sum of m products fits in a signed 64-bit word
    cdef long long bound = <long long>((9.2e18 / (m if m else 1)) ** 0.5) - 1
    cdef long long *A = <long long *>malloc(n * m * sizeof(long long))
    cdef long long *B = <long long *>malloc(m * k * sizeof(long long))
    cdef long long *C = NULL
    cdef long long acc, x
    cdef Py_ssize_t i, j, t
    cdef list out = None, orow
    if A == NULL or B == NULL:
        free(A)
        free(B)
        raise MemoryError()
    try:
        if not _fill_small(a, A, m, bound) or not _fill_small(b, B, k, bound):
            return None
        C = <long long *>calloc(n * k, sizeof(long long))
        if C == NULL:
            raise MemoryError()
        for i in range(n):
            for t in range(m):
                x = A[i * m + t]
                if x == 0:
                    continue
                for j in range(k):
                    C[i * k + j] += x * B[t * k + j]
        out = []
        for i in range(n):
            orow = [None] * k
            for j in range(k):
                orow[j] = C[i * k + j]
            out.append(orow)
        return out
    finally:
        free(A)
        free(B)
        free(C)


def matmul(list a, list b, zero):
    cdef Py_ssize_t n = len(a), m = len(b), k, i, j, t
    cdef list out, orow, arow, brow
    if n == 0:
        return []
    k = len(b[0]) if m else 0
    if type(zero) is int and m and k:
        out = _matmul_small(a, b, n, m, k)
        if out is not None:
            return out
    out = []
    for i in range(n):
        arow = a[i]
        orow = [zero] * k
        for t in range(m):
            x = arow[t]
            if not x:
                continue
            brow = b[t]
            for j in range(k):
                orow[j] = orow[j] + x * brow[j]
        out.append(orow)
    return out


def div_exact_int(list a, d):
    cdef list out = [], row, new
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


def bareiss(list work, div, Py_ssize_t max_steps=-1):
    cdef Py_ssize_t n = len(work)
    cdef Py_ssize_t m = len(work[0]) if n else 0
    cdef Py_ssize_t i, j, k, pi, pj, limit
    cdef list rperm = list(range(n)), cperm = list(range(m)), minors = []
    cdef list row, pivot_row
    cdef object prev = None
    cdef object mults = 0, divs = 0
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
        mults += 2 * (n - k - 1) * (m - k - 1)
        if prev is not None:
            divs += (n - k - 1) * (m - k - 1)
        minors.append(piv)
        prev = piv
        k += 1
    return k, rperm, cperm, minors, mults, divs


def bareiss_int(list work, Py_ssize_t max_steps=-1):
    cdef Py_ssize_t n = len(work)
    cdef Py_ssize_t m = len(work[0]) if n else 0
    cdef Py_ssize_t i, j, k, pi, pj, limit
    cdef list rperm = list(range(n)), cperm = list(range(m)), minors = []
    cdef list row, pivot_row
    cdef object prev = None
    cdef object mults = 0, divs = 0
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
                    q, r = divmod(piv * row[j] - lead * pivot_row[j], prev)
                    if r:
                        raise ArithmeticError(f"{prev} does not divide bareiss update")
                    row[j] = q
            row[k] = 0
        mults += 2 * (n - k - 1) * (m - k - 1)
        if prev is not None:
            divs += (n - k - 1) * (m - k - 1)
        minors.append(piv)
        prev = piv
        k += 1
    return k, rperm, cperm, minors, mults, divs


def inverse_mod(list a, object p):
    cdef Py_ssize_t n = len(a), w = 2 * len(a), i, j, k, pi
    cdef list aug = [], row, prow
    for i in range(n):
        row = [x % p for x in a[i]]
        row.extend([1 if i == j else 0 for j in range(n)])
        aug.append(row)
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


def matvec_mod(list a, list v, object p):
    cdef Py_ssize_t i, j, n = len(a), m = len(v)
    cdef list out = [], row
    for i in range(n):
        row = a[i]
        acc = 0
        for j in range(m):
            acc += row[j] * v[j]
        out.append(acc % p)
    return out


def lift_step_int(list a, list c, list x, object p):
    cdef Py_ssize_t i, j, n = len(a), m = len(x)
    cdef list out = [], row
    for i in range(n):
        row = a[i]
        acc = c[i]
        for j in range(m):
            acc -= row[j] * x[j]
        q, r = divmod(acc, p)
        if r:
            raise ArithmeticError("lifting residual not divisible by p")
        out.append(q)
    return out
