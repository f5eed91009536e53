"""Chained generator matrices and the generalized covering bound mu_t.

A generator matrix with rows c_1..c_k is chained when, writing
d_i = |supp(c_1) u ... u supp(c_i)|, every row c_i is zero beyond column d_i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChainError, DomainError
from .linalg import CodeMatrix, rank


@dataclass(frozen=True, eq=False)
class ChainedMatrix:
    gamma: CodeMatrix
    d: tuple
    perm: tuple  # perm[j] = original (1-based) column now at position j + 1

    @property
    def field(self):
        return self.gamma.field

    @property
    def n(self) -> int:
        return self.gamma.n

    @property
    def k(self) -> int:
        return self.gamma.k

    @property
    def q(self) -> int:
        return self.gamma.field.order

    def blocks(self):
        """(start, stop) zero-based column slices of the new support of each row."""
        prev = 0
        for di in self.d:
            yield prev, di
            prev = di


@dataclass(frozen=True)
class Violation:
    row: int  # 1-based; 0 for whole-matrix problems
    reason: str

    def __str__(self):
        where = f"row {self.row}" if self.row else "matrix"
        return f"{where}: {self.reason}"


def realized_d(rows: np.ndarray) -> tuple:
    """Prefix support sizes |supp(c_1) u ... u supp(c_i)|."""
    seen = np.logical_or.accumulate(np.asarray(rows) != 0, axis=0)
    return tuple(int(x) for x in seen.sum(axis=1))


def canonicalize_chained(M: CodeMatrix) -> ChainedMatrix:
    """Permute columns so each row's new support directly follows the old one.

    New columns are appended in ascending original index; columns outside the
    support of every row go last.  The returned d is the sequence realized by
    the given rows, which need not be the GHW hierarchy of the code.
    """
    if rank(M) != M.k:
        raise DomainError("rows are linearly dependent")
    order = []
    placed = np.zeros(M.n, dtype=bool)
    for row in M.rows:
        new = np.flatnonzero((row != 0) & ~placed)
        order.extend(int(c) for c in new)
        placed[new] = True
    order.extend(int(c) for c in np.flatnonzero(~placed))
    gamma = CodeMatrix(M.field, M.rows[:, order])
    ch = ChainedMatrix(gamma, realized_d(gamma.rows), tuple(c + 1 for c in order))
    check_chained(ch)
    return ch


def validate_chained(ch: ChainedMatrix) -> Violation | None:
    """First violated chained-matrix condition, or None."""
    rows, d, n = ch.gamma.rows, tuple(ch.d), ch.n
    if len(d) != ch.k:
        return Violation(0, f"d has {len(d)} entries for {ch.k} rows")
    if sorted(ch.perm) != list(range(1, n + 1)):
        return Violation(0, "perm is not a permutation of 1..n")
    union = np.zeros(n, dtype=bool)
    prev = 0
    for i, (row, di) in enumerate(zip(rows, d), start=1):
        if di <= prev:
            return Violation(i, f"d is not strictly increasing ({prev} then {di})")
        if di > n:
            return Violation(i, f"d_{i} = {di} exceeds n = {n}")
        if np.any(row[di:] != 0):
            return Violation(i, f"fewer than n - d_{i} = {n - di} trailing zeros")
        union |= row != 0
        if union.sum() != di:
            return Violation(i, f"prefix support has size {int(union.sum())}, not d_{i} = {di}")
        if np.any(row[prev:di] == 0):
            return Violation(i, f"zero entry among new-support positions {prev + 1}..{di}")
        prev = di
    # rows passing the checks above are block lower triangular with nonzero
    # diagonal blocks, hence independent; no rank computation needed
    return None


def check_chained(ch: ChainedMatrix) -> None:
    if getattr(ch, "_valid", False):
        return
    problem = validate_chained(ch)
    if problem is not None:
        raise ChainError(str(problem))
    object.__setattr__(ch, "_valid", True)


def mu_from_d(d, n: int, q: int, t: int = 1) -> int:
    """n - sum ceil((d_r - d_{r-1}) / q^t), with d_0 = 0."""
    if t < 1:
        raise DomainError("t must be at least 1")
    qt = q ** t
    prev, total = 0, 0
    for di in d:
        total += -(-(di - prev) // qt)
        prev = di
    return n - total


def bound_mu(ch: ChainedMatrix, t: int = 1) -> int:
    """Upper bound on the t-th generalized covering radius of the chained code."""
    return mu_from_d(ch.d, ch.n, ch.q, t)
