import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import int_matrix, poly_matrix
from exactla.cli import main
from exactla.errors import DimensionMismatch, ParseError
from exactla.matrix import Matrix
from exactla.rings import ZZ, PolyRing
from exactla.textio import format_matrix, matrix_from_tree, matrix_to_tree, parse_matrix, parse_vector


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_and_format():
    m = parse_matrix("# a comment\n2 2\n1 -2\n3 4  # trailing\n", ZZ)
    assert m.tolist() == [[1, -2], [3, 4]]
    assert format_matrix(m) == "2 2\n1 -2\n3 4\n"
    assert parse_vector("1 3\n1 2 3\n", ZZ) == [1, 2, 3]
    assert parse_vector("2 1\n5\n6\n", ZZ) == [5, 6]


def test_parse_errors():
    for bad, exc in [("", ParseError), ("2\n1 2\n", ParseError), ("1 2\n1\n", DimensionMismatch),
                     ("2 1\n1\n", DimensionMismatch), ("1 1\nabc\n", ParseError)]:
        with pytest.raises(exc):
            parse_matrix(bad, ZZ)
    with pytest.raises(DimensionMismatch):
        parse_vector("2 2\n1 2\n3 4\n", ZZ)


@given(st.integers(0, 2**32))
@settings(max_examples=50)
def test_round_trip(seed):
    rng = random.Random(seed)
    R = PolyRing(7)
    for m, dom in ((int_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), 10**20), ZZ),
                   (poly_matrix(rng, R, rng.randint(1, 3), rng.randint(1, 3), 3), R)):
        assert parse_matrix(format_matrix(m), dom) == m
        assert matrix_from_tree(json.loads(json.dumps(matrix_to_tree(m))), dom) == m


def test_det_identity(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n")
    assert run(["det", a], capsys)[:2] == (0, "1\n")


def test_det_poly(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "2 2\nx 1\n1 x\n")
    assert run(["det", a, "--ring", "polymod=5"], capsys)[:2] == (0, "4+x^2\n")


def test_rank_and_adj(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "2 2\n2 3\n4 5\n")
    assert run(["rank", a], capsys)[:2] == (0, "2\n")
    assert run(["adj", a], capsys)[:2] == (0, "2 2\n5 -3\n-4 2\n")
    code, out, _ = run(["adj", a, "--json"], capsys)
    assert json.loads(out) == {"det": "-2", "adjugate": {"rows": 2, "cols": 2, "entries": ["5", "-3", "-4", "2"]}}
    s = write(tmp_path, "s.txt", "2 2\n1 2\n2 4\n")
    assert run(["adj", s], capsys)[:2] == (1, "SINGULAR\n")


def test_solve_rational(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "1 2\n1 1\n")
    c = write(tmp_path, "c.txt", "1 1\n1\n")
    assert run(["solve", a, c], capsys)[:2] == (0, "1 0 / 1\n0 1 / 1\n")
    a2 = write(tmp_path, "a2.txt", "1 1\n2\n")
    c2 = write(tmp_path, "c2.txt", "1 1\n3\n")
    assert run(["solve", a2, c2], capsys)[:2] == (0, "3 / 2\n")
    bad_a = write(tmp_path, "b.txt", "2 1\n1\n1\n")
    bad_c = write(tmp_path, "bc.txt", "2 1\n1\n2\n")
    assert run(["solve", bad_a, bad_c], capsys)[:2] == (1, "INCONSISTENT\n")


def test_solve_diophantine(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "1 1\n2\n")
    c = write(tmp_path, "c.txt", "1 1\n3\n")
    assert run(["solve", a, c, "--mode", "diophantine"], capsys)[:2] == (1, "NO_SOLUTION\n")
    a = write(tmp_path, "a2.txt", "1 2\n2 4\n")
    c = write(tmp_path, "c2.txt", "1 1\n1\n")
    assert run(["solve", a, c, "--mode", "diophantine", "--max-iters", "3"], capsys)[:2] == (1, "INCONCLUSIVE\n")
    a = write(tmp_path, "a3.txt", "1 2\n1 2\n")
    c = write(tmp_path, "c3.txt", "1 1\n5\n")
    code, out, _ = run(["solve", a, c, "--mode", "diophantine", "--seed", "3"], capsys)
    assert code == 0
    for line in out.splitlines():
        x, y = map(int, line.split())
        assert x + 2 * y == 5


def test_input_errors(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "2 2\n1 2\n3\n")
    code, out, err = run(["det", a], capsys)
    assert code == 2 and "exactla:" in err and out == ""
    assert run(["det", str(tmp_path / "missing.txt")], capsys)[0] == 2
    ok = write(tmp_path, "ok.txt", "1 2\n1 2\n")
    assert run(["det", ok], capsys)[0] == 2
    assert run(["solve", ok], capsys)[0] == 2
    assert run(["det", ok, "--ring", "polymod=4"], capsys)[0] == 2
    c = write(tmp_path, "c.txt", "2 1\n1\n2\n")
    assert run(["solve", ok, c], capsys)[0] == 2
    assert run(["bench", "--sizes", "3"], capsys)[0] == 2


def test_out_file(tmp_path, capsys):
    a = write(tmp_path, "a.txt", "1 1\n7\n")
    out = tmp_path / "out.txt"
    assert run(["det", a, "--out", str(out)], capsys)[:2] == (0, "")
    assert out.read_text() == "7\n"


def test_bench_report(capsys):
    code, out, _ = run(["bench", "--sizes", "4,8,16,32"], capsys)
    assert code == 0
    report = json.loads(out)
    assert [r["n"] for r in report["records"]] == [4, 8, 16, 32]
    for r in report["records"]:
        assert {"n", "mults", "divs", "scalings", "predicted", "seconds"} <= set(r)
        assert r["mults"] == r["predicted"] and r["ratio"] == 1.0
    code, out, _ = run(["bench", "--sizes", "3,5", "--pad"], capsys)
    assert code == 0 and [r["padded"] for r in json.loads(out)["records"]] == [4, 8]


def test_same_seed_same_bytes(tmp_path):
    rng = random.Random(11)
    rows = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(3)]
    a = write(tmp_path, "a.txt", "3 6\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n")
    c = write(tmp_path, "c.txt", "3 1\n" + "\n".join(str(sum(r)) for r in rows) + "\n")
    cmd = [sys.executable, "-m", "exactla", "solve", a, c, "--mode", "diophantine", "--seed", "42"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_methods_agree(tmp_path, capsys):
    rng = random.Random(12)
    for t in range(8):
        n, m = rng.randint(1, 4), rng.randint(1, 6)
        rows = [[rng.randint(-5, 5) for _ in range(m)] for _ in range(n)]
        x0 = [rng.randint(-3, 3) for _ in range(m)]
        a = write(tmp_path, f"a{t}.txt", f"{n} {m}\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n")
        c = write(tmp_path, f"c{t}.txt", f"{n} 1\n" + "\n".join(str(sum(x * y for x, y in zip(r, x0))) for r in rows) + "\n")
        outs = {run(["solve", a, c, "--method", meth], capsys)[1] for meth in ("auto", "dixon", "adjoint", "bareiss")}
        assert len(outs) == 1
