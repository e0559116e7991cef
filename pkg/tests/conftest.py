import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from exactla import kernels  # noqa: E402
from exactla.matrix import Matrix  # noqa: E402
from exactla.rings import ZZ, PolyRing  # noqa: E402


def int_matrix(rng, n, m=None, bound=9):
    m = n if m is None else m
    return Matrix(ZZ, [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)], m)


def poly_matrix(rng, ring, n, m=None, degree=2):
    m = n if m is None else m
    return Matrix(ring, [[ring.random_element(rng, degree) for _ in range(m)] for _ in range(n)], m)


def low_rank_rows(rng, n, m, r, bound=3):
    """An n x m integer matrix that is a sum of r random rank-one terms."""
    U = [[rng.randint(-bound, bound) for _ in range(r)] for _ in range(n)]
    V = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(r)]
    return [[sum(U[i][k] * V[k][j] for k in range(r)) for j in range(m)] for i in range(n)]


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    previous = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


@pytest.fixture
def F5():
    return PolyRing(5)


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results):
        ok, detail = results[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
