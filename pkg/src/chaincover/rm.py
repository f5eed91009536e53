"""Reed-Muller codes RM_q(r, m): dimensions, GHWs and chained generators.

Columns are indexed by points of GF(q)^m.  The last variable x_m selects the
outer block, with block values ordered gamma^(q-2), ..., gamma^0, 0 from left
to right (gamma the primitive element of GF(q)); inside a block the same
ordering recurses on x_1..x_(m-1).  For q = 2 this is the familiar
(u + v, u) layout with the x_m = 1 half first.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from math import comb

import numpy as np

from .chain import ChainedMatrix, check_chained, realized_d
from .errors import DomainError
from .field import GF, field_for_order
from .linalg import CodeMatrix


def rho(r: int, m: int) -> int:
    """Dimension of binary RM(r, m): sum of C(m, i) for i <= r."""
    if r < 0 or m < 0:
        raise DomainError("rho needs r, m >= 0")
    return sum(comb(m, i) for i in range(r + 1))


@dataclass(frozen=True)
class CanonicalRep:
    pairs: tuple  # ((r_1, m_1), (r_2, m_2), ...)
    t: int
    r: int
    m: int

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def canonical_rep(t: int, r: int, m: int) -> CanonicalRep:
    """Write t = sum rho(r_i, m_i) with r_i non-increasing and m_i - r_i = m - r - i + 1."""
    if r < 0 or m < 0 or r > m:
        raise DomainError(f"need 0 <= r <= m, got r={r}, m={m}")
    if not 0 <= t <= rho(r, m):
        raise DomainError(f"t = {t} outside 0..rho({r},{m}) = {rho(r, m)}")
    pairs = []
    remaining, prev_r, i = t, r, 1
    while remaining:
        slack = m - r - i + 1
        choice = None
        for ri in range(prev_r, -1, -1):
            mi = ri + slack
            if mi >= 0 and rho(ri, mi) <= remaining:
                choice = (ri, mi)
                break
        if choice is None:
            raise AssertionError(f"greedy representation failed for t={t}, r={r}, m={m}")
        pairs.append(choice)
        remaining -= rho(*choice)
        prev_r = choice[0]
        i += 1
    return CanonicalRep(tuple(pairs), t, r, m)


def ghw_binary(t: int, r: int, m: int) -> int:
    """t-th generalized Hamming weight of binary RM(r, m)."""
    if not 1 <= t <= rho(min(r, m), m):
        raise DomainError(f"t = {t} outside 1..{rho(min(r, m), m)}")
    return sum(2 ** mi for _, mi in canonical_rep(t, min(r, m), m))


# -- q-ary constructions -------------------------------------------------------

def _field(q: int) -> tuple[GF, int]:
    spec = field_for_order(q)
    return spec.base, spec.gamma


def _check_params(q: int, r: int, m: int) -> int:
    if r < 0 or m < 0:
        raise DomainError("need r, m >= 0")
    return min(r, (q - 1) * m)


def block_values(q: int) -> list[int]:
    """x_m values of the column blocks, left to right: gamma^(q-2), ..., gamma^0, 0."""
    F, g = _field(q)
    return [int(F.pow(g, j)) for j in range(q - 2, -1, -1)] + [0]


def evaluation_points(q: int, m: int) -> np.ndarray:
    """q^m x m array; row j is the point (x_1..x_m) behind column j + 1."""
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    inner = evaluation_points(q, m - 1)
    blocks = [np.hstack([inner, np.full((len(inner), 1), a)]) for a in block_values(q)]
    return np.vstack(blocks)


def monomial_exponents(q: int, r: int, m: int) -> list[tuple]:
    r = _check_params(q, r, m)
    return [e for e in itertools.product(range(q), repeat=m) if sum(e) <= r]


def rm_dimension(q: int, r: int, m: int) -> int:
    return len(monomial_exponents(q, r, m))


def rm_monomial_matrix(q: int, r: int, m: int) -> CodeMatrix:
    """Evaluations of every monomial of degree <= r, per-variable degree < q."""
    F, _ = _field(q)
    pts = evaluation_points(q, m)
    rows = []
    for e in monomial_exponents(q, r, m):
        row = np.ones(len(pts), dtype=np.int64)
        for var, power in enumerate(e):
            if power:
                row = F.mul(row, F.pow(pts[:, var], power))
        rows.append(row)
    return CodeMatrix(F, np.array(rows))


def rm_generator_blocks(q: int, r: int, m: int) -> CodeMatrix:
    """Block generator matrix: block (i, x_m = a) is a^i * G(r - i, m - 1)."""
    F, _ = _field(q)
    r = _check_params(q, r, m)
    return CodeMatrix(F, _blocks(F, q, r, m, block_values(q)))


def _blocks(F, q, r, m, vals):
    if m == 0:
        return np.ones((1, 1), dtype=np.int64)
    w = min(r, q - 1)
    out = []
    for i in range(w, -1, -1):
        inner = _blocks(F, q, min(r - i, (q - 1) * (m - 1)), m - 1, vals)
        out.append(np.hstack([F.mul(F.pow(a, i), inner) for a in vals]))
    return np.vstack(out)


def _vanishing_scalars(F: GF, q: int, gamma: int) -> list[list[int]]:
    """h[i][a] = prod_{j<i} (a - a_j) with (a_0, a_1, ...) = (0, gamma^0, gamma^1, ...)."""
    roots = [0] + [int(F.pow(gamma, j)) for j in range(q - 1)]
    h = []
    for i in range(q):
        vals = np.ones(q, dtype=np.int64)
        for root in roots[:i]:
            vals = F.mul(vals, F.sub(F.elements(), root))
        h.append([int(x) for x in vals])
    return h


def _chained_rows(F, q, r, m, vals, h):
    if m == 0:
        return np.ones((1, 1), dtype=np.int64)
    w = min(r, q - 1)
    out = []
    for i in range(w, -1, -1):
        inner = _chained_rows(F, q, min(r - i, (q - 1) * (m - 1)), m - 1, vals, h)
        out.append(np.hstack([F.mul(h[i][a], inner) for a in vals]))
    return np.vstack(out)


_cache: dict = {}
_cache_lock = threading.Lock()


def chained_rm(q: int, r: int, m: int) -> ChainedMatrix:
    """Chained generator matrix of RM_q(r, m), built block-row by block-row.

    Block-row i (x_m-degree i, i = w down to 0) carries h_i(a) times the chained
    matrix of RM_q(r - i, m - 1) in the block x_m = a, where h_i vanishes on the
    i rightmost blocks, so the result is block lower triangular.
    """
    r = _check_params(q, r, m)
    key = (q, r, m)
    with _cache_lock:
        if key not in _cache:
            F, gamma = _field(q)
            rows = _chained_rows(F, q, r, m, block_values(q), _vanishing_scalars(F, q, gamma))
            gamma_m = CodeMatrix(F, rows)
            ch = ChainedMatrix(gamma_m, realized_d(rows), tuple(range(1, q ** m + 1)))
            check_chained(ch)
            _cache[key] = ch
        return _cache[key]


def ghw_rm(q: int, r: int, m: int) -> list[int]:
    """GHW hierarchy d_1 < ... < d_k of RM_q(r, m), read off the chained matrix."""
    return list(chained_rm(q, r, m).d)
