"""Dense vectors and matrices over a :class:`~chaincover.field.GF`.

Vectors are 1-D int64 arrays of element codes.  Coordinate sets handed to or
returned from this module are 1-indexed, matching the usual [n] notation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .field import GF


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    field: GF
    rows: np.ndarray

    def __post_init__(self):
        rows = np.array(self.rows, dtype=np.int64, copy=True)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.ndim != 2:
            raise DomainError("matrix must be two-dimensional")
        if rows.size and (rows.min() < 0 or rows.max() >= self.field.order):
            raise DomainError(f"entries must be codes of {self.field!r}")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, CodeMatrix)
            and self.field is other.field
            and np.array_equal(self.rows, other.rows)
        )

    def __repr__(self):
        return f"CodeMatrix({self.k}x{self.n} over {self.field!r})"


def _reduce(field: GF, A: np.ndarray):
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots = []
    row = 0
    k, n = A.shape
    for col in range(n):
        if row == k:
            break
        nz = np.nonzero(A[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            A[[row, piv]] = A[[piv, row]]
        A[row] = field.mul(A[row], field.inv(A[row, col]))
        others = np.nonzero(A[:, col])[0]
        others = others[others != row]
        if others.size:
            A[others] = field.sub(A[others], field.mul(A[others, col][:, None], A[row][None, :]))
        pivots.append(col)
        row += 1
    return pivots


def row_reduce(M: CodeMatrix) -> tuple[CodeMatrix, int]:
    """Reduced row echelon form (zero rows kept at the bottom) and rank."""
    A = M.rows.copy()
    pivots = _reduce(M.field, A)
    return CodeMatrix(M.field, A), len(pivots)


def rank(M: CodeMatrix) -> int:
    return row_reduce(M)[1]


def parity_check(G: CodeMatrix) -> CodeMatrix:
    """An (n-k) x n matrix H of full rank with G H^T = 0."""
    F = G.field
    A = G.rows.copy()
    pivots = _reduce(F, A)
    if len(pivots) != G.k:
        raise DomainError(f"generator matrix has rank {len(pivots)} < k = {G.k}")
    free = [c for c in range(G.n) if c not in set(pivots)]
    H = np.zeros((len(free), G.n), dtype=np.int64)
    for i, f in enumerate(free):
        H[i, f] = 1
        H[i, pivots] = F.neg(A[: len(pivots), f])
    return CodeMatrix(F, H.reshape(len(free), G.n))


def matmul(field: GF, A, B) -> np.ndarray:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = field.add(out, field.mul(A[:, j][:, None], B[j][None, :]))
    return out


def combine(field: GF, coeffs, rows) -> np.ndarray:
    """sum(coeffs[i] * rows[i]) for a coefficient vector and a row stack."""
    rows = np.asarray(rows, dtype=np.int64)
    out = np.zeros(rows.shape[1], dtype=np.int64)
    for c, row in zip(np.asarray(coeffs, dtype=np.int64), rows):
        if c:
            out = field.add(out, field.mul(c, row))
    return out


def solve(M: CodeMatrix, v, field: GF | None = None):
    """A message x with x M = v, or None when v is outside the row space.

    ``field`` may be an extension of ``M.field`` when v lives over it.
    """
    F = field or M.field
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (M.n,):
        raise DomainError(f"vector length {v.shape} does not match n = {M.n}")
    # reduce [M | I] so the right half records the row operations
    A = np.concatenate([M.rows, np.eye(M.k, dtype=np.int64)], axis=1)
    pivots = [c for c in _reduce(F, A) if c < M.n]
    R, T = A[: len(pivots), : M.n], A[: len(pivots), M.n:]
    x_r = v[pivots]
    if not np.array_equal(combine(F, x_r, R), v):
        return None
    return combine(F, x_r, T)


def in_row_space(M: CodeMatrix, v, field: GF | None = None) -> bool:
    return solve(M, v, field) is not None


def row_space_equal(A: CodeMatrix, B: CodeMatrix) -> bool:
    if A.n != B.n:
        return False
    ra, rb = row_reduce(A), row_reduce(B)
    return ra[1] == rb[1] and np.array_equal(ra[0].rows[: ra[1]], rb[0].rows[: rb[1]])


def _check_lengths(vs):
    if len({len(v) for v in vs}) > 1:
        raise DomainError("vectors have different lengths")


def support(v) -> frozenset:
    return frozenset(int(i) + 1 for i in np.flatnonzero(np.asarray(v)))


def joint_support(vs) -> frozenset:
    vs = [np.asarray(v) for v in vs]
    _check_lengths(vs)
    if not vs:
        return frozenset()
    return support(np.any(np.stack(vs) != 0, axis=0))


def weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def submatrix_columns(M: CodeMatrix, cols) -> CodeMatrix:
    """Columns with the given 1-based indices, in ascending order."""
    cols = sorted(cols)
    if cols and (cols[0] < 1 or cols[-1] > M.n):
        raise DomainError(f"column index out of range 1..{M.n}")
    idx = np.array(cols, dtype=np.int64) - 1
    return CodeMatrix(M.field, M.rows[:, idx].reshape(M.k, len(cols)))
