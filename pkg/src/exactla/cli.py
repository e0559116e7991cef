"""Command line front end.

    exactla <command> [A-file] [c-file] --ring z|polymod=<p> --mode rational|diophantine
            --method bareiss|adjoint|dixon|auto --seed <u64> --max-iters <n> --out <path>

Exit status is 0 on success, 1 for a mathematical negative (inconsistent
system, no integral solution, inconclusive search, singular matrix) and 2
for unreadable input.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .adjoint import adjoint
from .basis import METHODS, SystemInstance, consistency_check, rational_basis
from .bench import bench_report
from .diophantine import Inconclusive, NoSolution, solve_diophantine
from .elimination import determinant, rank
from .errors import DimensionMismatch, InconsistentSystem, ParseError, SingularMatrix
from .rings import parse_ring
from .textio import dumps_tree, format_matrix, format_rational_row, format_row, matrix_to_tree, read_matrix, read_vector

COMMANDS = ("det", "adj", "rank", "solve", "bench")
EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


@dataclass
class JobConfig:
    command: str
    ring: str = "z"
    mode: str = "rational"
    method: str = "auto"
    seed: int = 0
    max_iters: int | None = None
    a_path: str | None = None
    c_path: str | None = None
    out: str | None = None
    json: bool = False
    sizes: tuple = (8, 16, 32, 64)
    pad: bool = False


def _sizes(text):
    try:
        sizes = tuple(int(s) for s in text.split(",") if s.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exactla", description="Exact linear algebra over commutative domains.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("a_path", nargs="?", metavar="A-file")
    p.add_argument("c_path", nargs="?", metavar="c-file")
    p.add_argument("--ring", default="z", help="z (integers) or polymod=<p> (polynomials over GF(p))")
    p.add_argument("--mode", choices=("rational", "diophantine"), default="rational")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=None, dest="max_iters")
    p.add_argument("--out", default=None, help="write results here instead of stdout")
    p.add_argument("--json", action="store_true", help="structured output for det/adj/rank")
    p.add_argument("--sizes", type=_sizes, default=(8, 16, 32, 64), help="comma separated orders for bench")
    p.add_argument("--pad", action="store_true", help="allow bench orders that are not powers of two")
    return p


def config_from_args(argv=None) -> JobConfig:
    ns = build_parser().parse_args(argv)
    return JobConfig(**vars(ns))


def _need(path, what):
    if path is None:
        raise ParseError(f"missing {what} file")
    return path


def _scalar(domain, value, as_json):
    text = domain.format(value)
    return dumps_tree({"value": text}) if as_json else text + "\n"


def _solve(cfg: JobConfig, domain, rng):
    A = read_matrix(_need(cfg.a_path, "A"), domain)
    c = read_vector(_need(cfg.c_path, "c"), domain)
    system = SystemInstance(A, c)
    if cfg.mode == "rational":
        cons = consistency_check(system)
        if not cons.consistent:
            return "INCONSISTENT\n", EXIT_NEGATIVE
        basis = rational_basis(system, cfg.method, rng)
        lines = [format_rational_row(domain, xs, chi) for xs, chi in basis.vectors]
        return "".join(line + "\n" for line in lines), EXIT_OK
    try:
        res = solve_diophantine(system, rng, cfg.max_iters, cfg.method)
    except InconsistentSystem:
        return "INCONSISTENT\n", EXIT_NEGATIVE
    if isinstance(res, NoSolution):
        return "NO_SOLUTION\n", EXIT_NEGATIVE
    if isinstance(res, Inconclusive):
        return "INCONCLUSIVE\n", EXIT_NEGATIVE
    return "".join(format_row(domain, xs) + "\n" for xs in res.vectors), EXIT_OK


def execute(cfg: JobConfig) -> tuple[str, int]:
    """Run one job and return ``(output text, exit status)``."""
    rng = random.Random(cfg.seed)
    if cfg.command == "bench":
        try:
            report = bench_report(cfg.sizes, cfg.seed, allow_non_pow2=cfg.pad)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        return dumps_tree(report), EXIT_OK
    domain = parse_ring(cfg.ring)
    if cfg.command == "solve":
        return _solve(cfg, domain, rng)
    A = read_matrix(_need(cfg.a_path, "A"), domain)
    if cfg.command == "rank":
        r = rank(A)
        return (dumps_tree({"value": r}) if cfg.json else f"{r}\n"), EXIT_OK
    if cfg.command == "det":
        if not A.is_square():
            raise DimensionMismatch(f"determinant of a {A.rows}x{A.cols} matrix")
        return _scalar(domain, determinant(A), cfg.json), EXIT_OK
    if not A.is_square() or A.rows == 0:
        raise DimensionMismatch(f"adjugate of a {A.rows}x{A.cols} matrix")
    try:
        res = adjoint(A)
    except SingularMatrix:
        return "SINGULAR\n", EXIT_NEGATIVE
    if cfg.json:
        return dumps_tree({"det": domain.format(res.det), "adjugate": matrix_to_tree(res.adjugate)}), EXIT_OK
    return format_matrix(res.adjugate), EXIT_OK


def run(cfg: JobConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        text, status = execute(cfg)
    except (ParseError, DimensionMismatch, OSError) as exc:
        print(f"exactla: {exc}", file=stderr)
        return EXIT_INPUT
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main(argv=None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    sys.exit(main())
