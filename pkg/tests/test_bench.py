import random

import pytest

from exactla.bench import bench_record, bench_report, predicted_block_mults


def recursion_count(n):
    # two half-size subproblems plus six products of half-size blocks
    if n <= 2:
        return 0
    h = n // 2
    return 2 * recursion_count(h) + 6 * h**3


@pytest.mark.parametrize("n", [1, 2, 4, 8, 16, 32, 64, 128, 1024])
def test_predictor_matches_recursion(n):
    assert predicted_block_mults(n) == recursion_count(n)


def test_predictor_rejects_non_powers():
    with pytest.raises(ValueError):
        predicted_block_mults(12)


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
def test_measured_equals_predicted(n):
    r = bench_record(n, random.Random(n))
    assert r["mults"] == r["predicted"]
    assert r["mults_per_n3"] <= 1.0
    assert r["total_mults"] == r["mults"] + r["scalings"] + 2 * (n // 2 if n > 1 else 0)


def test_ratio_tends_to_one():
    ratios = [predicted_block_mults(2**p) / 8**p for p in range(2, 12)]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert 0.999 < ratios[-1] < 1.0


def test_report_shape_and_padding():
    rep = bench_report([4, 8], seed=1)
    assert rep["seed"] == 1 and len(rep["records"]) == 2
    with pytest.raises(ValueError):
        bench_report([6])
    rec = bench_report([6], allow_non_pow2=True)["records"][0]
    assert rec["n"] == 6 and rec["padded"] == 8 and rec["mults"] == rec["predicted"]
