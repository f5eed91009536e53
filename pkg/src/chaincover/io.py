"""Plain-text matrix, chained-matrix and vector files.

Matrix file::

    q=<field order> t=<extension degree> n=<n> k=<k>
    <k lines of n whitespace-separated element codes>

A chained matrix adds two trailer lines, ``d= d_1 ... d_k`` and
``perm= p_1 ... p_n``.  Vector files hold one vector per line.  Entries are
element codes as described in :mod:`chaincover.field`; with t > 1 they are
codes of GF(q^t).  Blank lines are ignored.
"""

from __future__ import annotations

import numpy as np

from .chain import ChainedMatrix, canonicalize_chained, check_chained
from .errors import DomainError
from .field import field_for_order
from .linalg import CodeMatrix


def _join(values) -> str:
    return " ".join(str(int(x)) for x in values)


def format_matrix(M: CodeMatrix, t: int = 1) -> str:
    q = next((b for b in range(2, M.field.order + 1) if b ** t == M.field.order), None)
    if q is None:
        raise DomainError(f"field order {M.field.order} is not a {t}-th power")
    lines = [f"q={q} t={t} n={M.n} k={M.k}"]
    lines += [_join(row) for row in M.rows]
    return "\n".join(lines) + "\n"


def format_chained(ch: ChainedMatrix) -> str:
    return format_matrix(ch.gamma) + f"d= {_join(ch.d)}\nperm= {_join(ch.perm)}\n"


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _parse_header(line: str) -> dict:
    try:
        fields = dict(item.split("=", 1) for item in line.split())
        header = {key: int(fields[key]) for key in ("q", "t", "n", "k")}
    except (KeyError, ValueError) as exc:
        raise DomainError(f"bad matrix header {line!r}; expected 'q=.. t=.. n=.. k=..'") from exc
    return header


def _ints(line: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError as exc:
        raise DomainError(f"non-integer entry in line {line!r}") from exc


def _parse(text: str):
    lines = _lines(text)
    if not lines:
        raise DomainError("empty matrix file")
    h = _parse_header(lines[0])
    body = lines[1:1 + h["k"]]
    if len(body) != h["k"]:
        raise DomainError(f"expected {h['k']} rows, found {len(body)}")
    rows = [_ints(ln) for ln in body]
    if any(len(r) != h["n"] for r in rows):
        raise DomainError(f"every row must have n = {h['n']} entries")
    spec = field_for_order(h["q"], h["t"])
    M = CodeMatrix(spec.ext, np.array(rows, dtype=np.int64).reshape(h["k"], h["n"]))
    trailer = {}
    for ln in lines[1 + h["k"]:]:
        key, _, rest = ln.partition("=")
        trailer[key.strip()] = _ints(rest)
    return M, trailer


def parse_matrix(text: str) -> CodeMatrix:
    return _parse(text)[0]


def parse_chained(text: str) -> ChainedMatrix:
    """Read a chained matrix; without d/perm trailers the rows are canonicalized."""
    M, trailer = _parse(text)
    if "d" not in trailer:
        return canonicalize_chained(M)
    perm = trailer.get("perm", list(range(1, M.n + 1)))
    ch = ChainedMatrix(M, tuple(trailer["d"]), tuple(perm))
    check_chained(ch)
    return ch


def format_vectors(vs) -> str:
    return "".join(_join(v) + "\n" for v in np.atleast_2d(vs))


def parse_vectors(text: str, n: int | None = None) -> np.ndarray:
    rows = [_ints(ln) for ln in _lines(text)]
    if not rows:
        raise DomainError("empty vector file")
    if len({len(r) for r in rows}) != 1 or (n is not None and len(rows[0]) != n):
        raise DomainError(f"vectors must all have length {n or len(rows[0])}")
    return np.array(rows, dtype=np.int64)


def read_text(path: str) -> str:
    with open(path) as fh:
        return fh.read()
