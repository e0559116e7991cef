"""Both kernel backends must agree exactly on every kernel."""
import os
import random
import subprocess
import sys

import pytest

from exactla import _pykernels, kernels
from exactla.rings import PolyRing

BACKENDS = kernels.available_backends()


def _rows(rng, n, m, bound):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def _all(fn_name, *args):
    out = {}
    for name, mod in BACKENDS.items():
        copied = [[list(r) for r in a] if isinstance(a, list) and a and isinstance(a[0], list) else a for a in args]
        out[name] = getattr(mod, fn_name)(*copied)
    return out


def _same(results):
    vals = list(results.values())
    return all(v == vals[0] for v in vals)


def test_selected_backend_is_listed():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


def test_use_backend_round_trip():
    previous = kernels.use_backend("python")
    assert kernels.BACKEND == "python" and kernels.matmul is _pykernels.matmul
    kernels.use_backend(previous)
    assert kernels.BACKEND == previous
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_env_forces_python_backend():
    code = "from exactla import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, EXACTLA_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled backend not built")
def test_compiled_backend_selected_by_default():
    code = "from exactla import kernels; print(kernels.BACKEND)"
    env = {k: v for k, v in os.environ.items() if k != "EXACTLA_PURE_PYTHON"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"


@pytest.mark.parametrize("bound", [5, 10**9, 10**30])
def test_matmul_agree(bound):
    rng = random.Random(bound)
    for _ in range(10):
        n, m, k = (rng.randint(1, 7) for _ in range(3))
        assert _same(_all("matmul", _rows(rng, n, m, bound), _rows(rng, m, k, bound), 0))


def test_matmul_poly_agree():
    rng = random.Random(4)
    R = PolyRing(3)
    a = [[R.random_element(rng, 2) for _ in range(3)] for _ in range(2)]
    b = [[R.random_element(rng, 2) for _ in range(2)] for _ in range(3)]
    assert _same(_all("matmul", a, b, R.zero))


def test_bareiss_agree():
    rng = random.Random(5)
    for _ in range(40):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        a = _rows(rng, n, m, rng.choice([1, 3, 50]))
        res = {}
        for name, mod in BACKENDS.items():
            w1, w2 = [list(r) for r in a], [list(r) for r in a]
            r1 = mod.bareiss_int(w1)
            r2 = mod.bareiss(w2, lambda x, y: x // y)
            assert r1 == r2 and w1 == w2
            res[name] = (r1, w1)
        assert _same(res)


def test_inverse_and_lift_agree():
    rng = random.Random(6)
    p = 1000003
    for _ in range(20):
        n = rng.randint(1, 6)
        a = _rows(rng, n, n, 100)
        inv = _all("inverse_mod", a, p)
        assert _same(inv)
        if inv["python"] is None:
            continue
        c = [rng.randint(-1000, 1000) for _ in range(n)]
        x = _all("matvec_mod", inv["python"], c, p)
        assert _same(x)
        assert _same(_all("lift_step_int", a, c, x["python"], p))


def test_inverse_mod_singular():
    for mod in BACKENDS.values():
        assert mod.inverse_mod([[1, 2], [2, 4]], 7) is None
        assert mod.inverse_mod([[7, 0], [0, 1]], 7) is None


def test_div_exact_agree_and_raise():
    for mod in BACKENDS.values():
        assert mod.div_exact_int([[6, -9], [0, 3]], 3) == [[2, -3], [0, 1]]
        with pytest.raises(ArithmeticError):
            mod.div_exact_int([[5]], 3)
