"""Dense matrices over a domain, permutations and operation counting."""
from __future__ import annotations

from dataclasses import dataclass, fields

from . import kernels
from .errors import BadCut, DimensionMismatch, NotDivisible, NotSquare
from .rings import ZZ, Domain


@dataclass
class OpCounter:
    """Tallies of ring multiplications and exact divisions.

    ``multiplications`` counts every multiplication. ``matmul_multiplications``
    and ``scalings`` are the parts of it spent inside classical matrix products
    and in scalar-by-matrix products respectively.
    """

    multiplications: int = 0
    exact_divisions: int = 0
    matmul_multiplications: int = 0
    scalings: int = 0

    def snapshot(self) -> "OpCounter":
        return OpCounter(**{f.name: getattr(self, f.name) for f in fields(self)})

    def add_mults(self, k: int) -> None:
        self.multiplications += k

    def add_divs(self, k: int) -> None:
        self.exact_divisions += k


class Matrix:
    """Immutable dense matrix stored as a list of row lists."""

    __slots__ = ("domain", "rows", "cols", "data")

    def __init__(self, domain: Domain, data, cols: int | None = None):
        self.domain = domain
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        if cols is None:
            cols = len(self.data[0]) if self.data else 0
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def _wrap(cls, domain, data, rows, cols):
        obj = cls.__new__(cls)
        obj.domain = domain
        obj.data = data
        obj.rows = rows
        obj.cols = cols
        return obj

    @classmethod
    def from_flat(cls, domain, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls(domain, [entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def identity(cls, domain, n):
        z, o = domain.zero, domain.one
        return cls._wrap(domain, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, domain, rows, cols):
        return cls._wrap(domain, [[domain.zero] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def column(cls, domain, values):
        return cls(domain, [[v] for v in values], 1)

    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def entries(self):
        return [x for r in self.data for x in r]

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def col(self, j):
        return [r[j] for r in self.data]

    def tolist(self):
        return [list(r) for r in self.data]

    def copy_rows(self):
        return [list(r) for r in self.data]

    def transpose(self):
        return Matrix._wrap(self.domain, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)], self.cols, self.rows)

    def submatrix(self, rows, cols):
        data = self.data
        return Matrix._wrap(self.domain, [[data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def is_square(self):
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __neg__(self):
        return Matrix._wrap(self.domain, [[-x for x in r] for r in self.data], self.rows, self.cols)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"Matrix({self.domain!r}, {self.data!r})"


def _check_same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")


def add(a: Matrix, b: Matrix) -> Matrix:
    _check_same_shape(a, b)
    return Matrix._wrap(a.domain, [[x + y for x, y in zip(r, s)] for r, s in zip(a.data, b.data)], a.rows, a.cols)


def sub(a: Matrix, b: Matrix) -> Matrix:
    _check_same_shape(a, b)
    return Matrix._wrap(a.domain, [[x - y for x, y in zip(r, s)] for r, s in zip(a.data, b.data)], a.rows, a.cols)


def mat_mul(a: Matrix, b: Matrix, counter: OpCounter | None = None) -> Matrix:
    """Classical product; adds ``a.rows * a.cols * b.cols`` multiplications."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    if counter is not None:
        k = a.rows * a.cols * b.cols
        counter.multiplications += k
        counter.matmul_multiplications += k
    if a.cols == 0:
        return Matrix.zeros(a.domain, a.rows, b.cols)
    return Matrix._wrap(a.domain, kernels.matmul(a.data, b.data, a.domain.zero), a.rows, b.cols)


def matvec(a: Matrix, v, counter: OpCounter | None = None):
    if a.cols != len(v):
        raise DimensionMismatch(f"cannot multiply {a.shape} by a vector of length {len(v)}")
    return mat_mul(a, Matrix._wrap(a.domain, [[x] for x in v], len(v), 1), counter).col(0) if a.rows else []


def scale(c, a: Matrix, counter: OpCounter | None = None) -> Matrix:
    """Scalar-by-matrix product, tallied under both totals and ``scalings``."""
    if counter is not None:
        k = a.rows * a.cols
        counter.multiplications += k
        counter.scalings += k
    return Matrix._wrap(a.domain, [[c * x for x in r] for r in a.data], a.rows, a.cols)


def div_exact(a: Matrix, d, counter: OpCounter | None = None) -> Matrix:
    """Entrywise exact division by a nonzero scalar."""
    if counter is not None:
        counter.exact_divisions += a.rows * a.cols
    dom = a.domain
    if d == dom.one:
        return a
    if dom is ZZ:
        if d == 0:
            dom.exact_div(0, 0)
        try:
            data = kernels.div_exact_int(a.data, d)
        except ArithmeticError as exc:
            raise NotDivisible(str(exc)) from None
    else:
        ed = dom.exact_div
        data = [[ed(x, d) for x in r] for r in a.data]
    return Matrix._wrap(dom, data, a.rows, a.cols)


def split_blocks(a: Matrix, row_cut: int, col_cut: int):
    """Split into ``(A, C, B, D)`` laid out as ``[[A, C], [B, D]]``."""
    if not (0 < row_cut < a.rows and 0 < col_cut < a.cols):
        raise BadCut(f"cuts ({row_cut}, {col_cut}) invalid for shape {a.shape}")
    d = a.data
    top, bot = d[:row_cut], d[row_cut:]
    A = Matrix._wrap(a.domain, [r[:col_cut] for r in top], row_cut, col_cut)
    C = Matrix._wrap(a.domain, [r[col_cut:] for r in top], row_cut, a.cols - col_cut)
    B = Matrix._wrap(a.domain, [r[:col_cut] for r in bot], a.rows - row_cut, col_cut)
    D = Matrix._wrap(a.domain, [r[col_cut:] for r in bot], a.rows - row_cut, a.cols - col_cut)
    return A, C, B, D


def join_blocks(A: Matrix, C: Matrix, B: Matrix, D: Matrix) -> Matrix:
    if A.rows != C.rows or B.rows != D.rows or A.cols != B.cols or C.cols != D.cols:
        raise DimensionMismatch("blocks do not conform")
    data = [r + s for r, s in zip(A.data, C.data)] + [r + s for r, s in zip(B.data, D.data)]
    return Matrix._wrap(A.domain, data, A.rows + B.rows, A.cols + C.cols)


class Permutation:
    """Bijection on ``0..n-1``.

    As a row permutation, position ``i`` receives original row ``image[i]``;
    as a column permutation, position ``j`` receives original column
    ``image[j]``.
    """

    __slots__ = ("image",)

    def __init__(self, image):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        self.image = image

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @classmethod
    def transposition(cls, n, i, j):
        img = list(range(n))
        img[i], img[j] = img[j], img[i]
        return cls(img)

    @classmethod
    def random(cls, n, rng):
        img = list(range(n))
        rng.shuffle(img)
        return cls(img)

    def __len__(self):
        return len(self.image)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"Permutation({list(self.image)})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for i, v in enumerate(self.image):
            inv[v] = i
        return Permutation(inv)

    def then(self, other: "Permutation") -> "Permutation":
        """Row map equal to applying ``self`` first and ``other`` second."""
        return Permutation(self.image[k] for k in other.image)

    def sign(self) -> int:
        seen = [False] * len(self.image)
        s = 1
        for i in range(len(self.image)):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = self.image[j]
                    length += 1
                if length % 2 == 0:
                    s = -s
        return s

    def row_matrix(self, domain) -> Matrix:
        """Matrix ``P`` with ``P @ a == apply_row_perm(self, a)``."""
        n = len(self.image)
        z, o = domain.zero, domain.one
        return Matrix._wrap(domain, [[o if j == self.image[i] else z for j in range(n)] for i in range(n)], n, n)

    def col_matrix(self, domain) -> Matrix:
        """Matrix ``Q`` with ``a @ Q == apply_col_perm(self, a)``."""
        return self.row_matrix(domain).transpose()


def apply_row_perm(p: Permutation, a: Matrix) -> Matrix:
    if len(p) != a.rows:
        raise DimensionMismatch(f"permutation of size {len(p)} on {a.rows} rows")
    return Matrix._wrap(a.domain, [list(a.data[k]) for k in p.image], a.rows, a.cols)


def apply_col_perm(p: Permutation, a: Matrix) -> Matrix:
    if len(p) != a.cols:
        raise DimensionMismatch(f"permutation of size {len(p)} on {a.cols} columns")
    img = p.image
    return Matrix._wrap(a.domain, [[r[k] for k in img] for r in a.data], a.rows, a.cols)


def permute_vector(p: Permutation, v):
    return [v[k] for k in p.image]


def next_pow2(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


def pad_to_pow2(a: Matrix) -> Matrix:
    """Embed a square matrix as ``diag(a, I)`` of the next power-of-two order."""
    if not a.is_square():
        raise NotSquare(f"padding needs a square matrix, got {a.shape}")
    n = a.rows
    size = next_pow2(n)
    if size == n:
        return a
    z, o = a.domain.zero, a.domain.one
    data = [list(r) + [z] * (size - n) for r in a.data]
    data += [[z] * i + [o] + [z] * (size - i - 1) for i in range(n, size)]
    return Matrix._wrap(a.domain, data, size, size)
