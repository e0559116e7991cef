"""Text formats used by the command line.

Matrix file::

    <rows> <cols>
    a11 a12 ...
    ...

Entries are whitespace separated: decimal integers, or polynomials written
``c0+c1*x+c2*x^2``. Blank lines and ``#`` comments are ignored. The
structured form of a matrix is the JSON object
``{"rows": r, "cols": c, "entries": [row-major strings]}``.
"""
from __future__ import annotations

import json

from .errors import DimensionMismatch, ParseError
from .matrix import Matrix


def _lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_matrix(text: str, domain) -> Matrix:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ParseError(f"bad header {lines[0]!r}; expected '<rows> <cols>'")
    rows, cols = map(int, header)
    body = lines[1:]
    if len(body) != rows:
        raise DimensionMismatch(f"header says {rows} rows, found {len(body)}")
    data = []
    for i, line in enumerate(body):
        tokens = line.split()
        if len(tokens) != cols:
            raise DimensionMismatch(f"row {i + 1} has {len(tokens)} entries, expected {cols}")
        data.append([domain.parse(t) for t in tokens])
    return Matrix(domain, data, cols)


def parse_vector(text: str, domain) -> list:
    """Read a right-hand side given as an ``n x 1`` or ``1 x n`` matrix file."""
    m = parse_matrix(text, domain)
    if m.cols == 1:
        return m.col(0)
    if m.rows == 1:
        return m.row(0)
    raise DimensionMismatch(f"right-hand side must be a single row or column, got {m.rows}x{m.cols}")


def read_matrix(path, domain) -> Matrix:
    with open(path) as fh:
        return parse_matrix(fh.read(), domain)


def read_vector(path, domain) -> list:
    with open(path) as fh:
        return parse_vector(fh.read(), domain)


def format_matrix(m: Matrix) -> str:
    fmt = m.domain.format
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(fmt(x) for x in row) for row in m.data]
    return "\n".join(lines) + "\n"


def matrix_to_tree(m: Matrix) -> dict:
    fmt = m.domain.format
    return {"rows": m.rows, "cols": m.cols, "entries": [fmt(x) for x in m.entries]}


def matrix_from_tree(tree: dict, domain) -> Matrix:
    try:
        rows, cols, entries = tree["rows"], tree["cols"], tree["entries"]
    except (KeyError, TypeError):
        raise ParseError("tree must have rows, cols and entries") from None
    return Matrix.from_flat(domain, rows, cols, [domain.parse(e) for e in entries])


def dumps_tree(tree) -> str:
    return json.dumps(tree, indent=2) + "\n"


def format_rational_row(domain, xs, chi) -> str:
    """One basis vector as ``x1 x2 ... / chi``."""
    return " ".join(domain.format(x) for x in xs) + " / " + domain.format(chi)


def format_row(domain, xs) -> str:
    return " ".join(domain.format(x) for x in xs)
