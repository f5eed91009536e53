"""Generalized covering of t words by t codewords.

:func:`cover_t` works for any chained code over GF(q): the t input words are
packed into one word over GF(q^t) and covered row by row, bottom row first,
by the scalar multiple agreeing with the most positions of that row's new
support.  :func:`cover_recursive_rm` does the same for binary Reed-Muller
codes through the (u + v, u) recursion, falling back to :func:`cover_t` once
the order drops to 1.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .chain import ChainedMatrix, bound_mu, check_chained
from .errors import DomainError
from .field import GF, FieldSpec, compose, decompose, make_field, prime_power
from .linalg import support
from .rm import chained_rm

TIE_BREAKS = ("min", "max")


@dataclass(frozen=True, eq=False)
class CoverResult:
    codewords: np.ndarray  # t x n over GF(q)
    support: frozenset  # I, 1-based
    bound: int
    residual: np.ndarray  # u_final over GF(q^t); its support is I
    trace: tuple = ()  # ((i, a_i), ...) in the order the rows were used
    branch: str = "joint"
    extra: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.support)


def _mode(ratios, tie_break: str) -> tuple[int, int]:
    counts = Counter(ratios)
    best = max(counts.values())
    pick = min if tie_break == "min" else max
    return pick(x for x, c in counts.items() if c == best), best


def pigeonhole_scalar(u_block, r_block, E: GF, tie_break: str = "min") -> tuple[int, int]:
    """Scalar a maximizing #{j : u_j = a r_j}, i.e. the mode of u_j / r_j.

    Ties go to the smallest (or largest) code.  Returns (a, number of matches).
    """
    r_block = np.asarray(r_block, dtype=np.int64)
    if np.any(r_block == 0):
        raise DomainError("row block contains a zero entry")
    if tie_break not in TIE_BREAKS:
        raise DomainError(f"tie_break must be one of {TIE_BREAKS}")
    return _mode(E.mul(u_block, E.inv(r_block)).tolist(), tie_break)


def _row_lists(ch: ChainedMatrix):
    """Rows and their entrywise inverses as int lists, cached on the matrix."""
    cached = getattr(ch, "_row_lists", None)
    if cached is None:
        rows = ch.gamma.rows
        inv = np.zeros_like(rows)
        nz = rows != 0
        inv[nz] = ch.field.inv(rows[nz])
        cached = (rows.tolist(), inv.tolist(), list(ch.blocks()))
        object.__setattr__(ch, "_row_lists", cached)
    return cached


def _ext_spec(ch: ChainedMatrix, t: int) -> FieldSpec:
    p, e = prime_power(ch.q)
    spec = make_field(p, e, t)
    if spec.base is not ch.field and spec.base.modulus != ch.field.modulus:
        raise DomainError("matrix field does not match the canonical GF(q)")
    return spec


def _pack(spec: FieldSpec, vs, n: int) -> np.ndarray:
    vs = np.atleast_2d(np.asarray(vs, dtype=np.int64))
    if vs.shape != (spec.t, n):
        raise DomainError(f"expected {spec.t} words of length {n}, got shape {vs.shape}")
    if vs.size and (vs.min() < 0 or vs.max() >= spec.q):
        raise DomainError(f"entries must be codes of GF({spec.q})")
    return compose(spec, vs.T)


def _reduce_word(ch: ChainedMatrix, u: np.ndarray, E: GF, tie_break: str):
    """Run the row-by-row covering on u over E; returns (u_final, trace).

    Base-field entries of the matrix are valid codes of the extension E, and
    so are their base-field inverses.
    """
    if tie_break not in TIE_BREAKS:
        raise DomainError(f"tie_break must be one of {TIE_BREAKS}")
    rows, inv_rows, blocks = _row_lists(ch)
    mul, sub = E.scalar_ops()
    u = u.tolist()
    trace = []
    for i in range(ch.k - 1, -1, -1):
        lo, hi = blocks[i]
        row, inv_row = rows[i], inv_rows[i]
        a, _ = _mode([mul(u[j], inv_row[j]) for j in range(lo, hi)], tie_break)
        if a:
            for j in range(hi):
                if row[j]:
                    u[j] = sub(u[j], mul(a, row[j]))
        trace.append((i + 1, a))
    return np.array(u, dtype=np.int64), tuple(trace)


def cover_t(ch: ChainedMatrix, vs, tie_break: str = "min") -> CoverResult:
    """Cover the t rows of ``vs`` by codewords of the chained code.

    The joint support of the differences is at most ``bound_mu(ch, t)``.
    """
    check_chained(ch)
    vs = np.atleast_2d(np.asarray(vs, dtype=np.int64))
    t = vs.shape[0]
    if t < 1:
        raise DomainError("need at least one word to cover")
    spec = _ext_spec(ch, t)
    u0 = _pack(spec, vs, ch.n)
    u, trace = _reduce_word(ch, u0, spec.ext, tie_break)
    # the covering codeword is u0 - u_final; in odd characteristic the sign matters
    codewords = decompose(spec, spec.ext.sub(u0, u)).T
    return CoverResult(codewords, support(u), bound_mu(ch, t), u, trace)


# -- binary Reed-Muller recursion ----------------------------------------------

@functools.lru_cache(maxsize=None)
def recursive_bound(t: int, r: int, m: int) -> int:
    """Certified bound of the recursion: B(r, m) = B(r, m-1) + B(r-1, m-1)."""
    if t < 1 or r < 0 or m < 0:
        raise DomainError("need t >= 1 and r, m >= 0")
    if r >= m:
        return 0
    if r <= 1:
        return bound_mu(chained_rm(2, r, m), t)
    return recursive_bound(t, r, m - 1) + recursive_bound(t, r - 1, m - 1)


def _recursive(u: np.ndarray, r: int, m: int, E: GF, tie_break: str) -> np.ndarray:
    """A codeword of RM(r, m) over E close to u."""
    if r >= m:
        return u.copy()
    if r <= 1:
        u_final, _ = _reduce_word(chained_rm(2, r, m), u, E, tie_break)
        return E.sub(u, u_final)
    half = len(u) // 2
    # columns are (x_m = 1 half, x_m = 0 half): codewords look like (x + y, x)
    x = _recursive(u[half:], r, m - 1, E, tie_break)
    y = _recursive(E.sub(u[:half], x), r - 1, m - 1, E, tie_break)
    return np.concatenate([E.add(x, y), x])


def cover_recursive_rm(r: int, m: int, vs, tie_break: str = "min") -> CoverResult:
    """Cover t binary words by codewords of RM(r, m) via the (u + v, u) recursion.

    Both the joint cover over GF(2^t) and the row-by-row cover are computed;
    the one with the smaller joint support is returned (joint on ties).
    """
    if r < 0 or m < 0:
        raise DomainError("need r, m >= 0")
    r = min(r, m)
    n = 2 ** m
    vs = np.atleast_2d(np.asarray(vs, dtype=np.int64))
    t = vs.shape[0]
    spec = make_field(2, 1, t)
    u0 = _pack(spec, vs, n)
    E = spec.ext

    joint_cw = decompose(spec, _recursive(u0, r, m, E, tie_break)).T
    single = make_field(2, 1, 1).ext
    split_cw = np.stack([_recursive(v, r, m, single, tie_break) for v in vs])

    joint_I = support(E.sub(u0, compose(spec, joint_cw.T)))
    split_I = support(E.sub(u0, compose(spec, split_cw.T)))
    if len(split_I) < len(joint_I):
        codewords, I, branch = split_cw, split_I, "subadditive"
    else:
        codewords, I, branch = joint_cw, joint_I, "joint"
    residual = E.sub(u0, compose(spec, codewords.T))
    return CoverResult(
        codewords, I, recursive_bound(t, r, m), residual, branch=branch,
        extra={"joint_size": len(joint_I), "subadditive_size": len(split_I)},
    )
