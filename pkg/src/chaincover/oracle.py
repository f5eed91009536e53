"""Exhaustive reference computations for small codes.

Nothing here is clever: covering radii come from breadth-first enumeration
of coset leaders, GHWs from enumerating every column subset of a parity-check
matrix, nearest codewords from scanning the whole code.  Every routine has a
hard size budget and raises :class:`~chaincover.errors.BudgetError` beyond it.
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetError, DomainError
from .field import GF, field_for_order
from .linalg import CodeMatrix, parity_check

ENUM_BUDGET = 1 << 24
GHW_MAX_N = 24


def _digit_add(a, b, p: int, ndigits: int):
    if p == 2:
        return a ^ b
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    scale = 1
    for _ in range(ndigits):
        out += (((a // scale) + (b // scale)) % p) * scale
        scale *= p
    return out


def _coset_radius(H: np.ndarray, E: GF) -> int:
    """Largest coset-leader weight for the code with parity checks H over E."""
    s, n = H.shape
    if s == 0:
        return 0
    Q = E.order
    total = Q ** s
    if total > ENUM_BUDGET:
        raise BudgetError(f"{Q}^{s} syndromes exceed the 2^24 budget")
    weights = Q ** np.arange(s, dtype=np.int64)
    scalars = np.arange(1, Q, dtype=np.int64)
    gens = set()
    for j in range(n):
        col = E.mul(scalars[:, None], H[:, j][None, :])  # (Q-1) x s
        gens.update(int(g) for g in (col * weights).sum(axis=1))
    gens.discard(0)
    ndig = E.ndigits * s

    visited = np.zeros(total, dtype=bool)
    visited[0] = True
    frontier = np.zeros(1, dtype=np.int64)
    seen, radius = 1, 0
    while seen < total:
        layer = []
        for g in gens:
            cand = _digit_add(frontier, g, E.p, ndig)
            cand = np.unique(cand[~visited[cand]])
            visited[cand] = True
            layer.append(cand)
        frontier = np.concatenate(layer)
        if frontier.size == 0:
            raise DomainError("parity-check matrix does not have full rank")
        seen += frontier.size
        radius += 1
    return radius


def exact_covering_radius(G: CodeMatrix) -> int:
    """Covering radius R_1 of the row space of G."""
    return _coset_radius(parity_check(G).rows, G.field)


def exact_generalized_radius(G: CodeMatrix, t: int) -> int:
    """R_t of the code: the covering radius of G read over GF(q^t)."""
    if t < 1:
        raise DomainError("t must be at least 1")
    spec = field_for_order(G.field.order, t)
    return _coset_radius(parity_check(G).rows, spec.ext)


def _tables(F: GF):
    if F.order > 256:
        raise BudgetError("subset enumeration supports fields of order <= 256")
    el = F.elements()
    mul = F.mul(el[:, None], el[None, :]).tolist()
    sub = F.sub(el[:, None], el[None, :]).tolist()
    inv = [0] + [int(x) for x in F.inv(el[1:])]
    return mul, sub, inv


def exact_ghw(G: CodeMatrix, r: int | None = None, field: GF | None = None):
    """Generalized Hamming weights via d_r = min{|I| : |I| - rank(H_I) >= r}.

    Returns d_r, or the whole list d_1..d_k when r is None.  ``field`` may be
    an extension of G's field; ranks are then taken over it.
    """
    n = G.n
    if n > GHW_MAX_N:
        raise BudgetError(f"subset enumeration limited to n <= {GHW_MAX_N}")
    H = parity_check(G).rows
    k = G.k
    F = field or G.field
    mul, sub, inv = _tables(F)
    cols = [tuple(int(x) for x in H[:, j]) for j in range(n)]
    best = [0] * (n + 1)  # best[s] = max |I| - rank(H_I) over |I| = s

    def reduce(c, basis):
        c = list(c)
        for piv, b in basis:
            f = c[piv]
            if f:
                c = [sub[x][mul[f][y]] for x, y in zip(c, b)]
        return c

    def dfs(start, basis, size):
        excess = size - len(basis)
        if excess > best[size]:
            best[size] = excess
        for j in range(start, n):
            c = reduce(cols[j], basis)
            piv = next((i for i, x in enumerate(c) if x), None)
            if piv is None:
                dfs(j + 1, basis, size + 1)
            else:
                scale = inv[c[piv]]
                basis.append((piv, [mul[scale][x] for x in c]))
                dfs(j + 1, basis, size + 1)
                basis.pop()

    dfs(0, [], 0)
    d = []
    for target in range(1, k + 1):
        d.append(next(s for s in range(n + 1) if best[s] >= target))
    if r is None:
        return d
    if not 1 <= r <= k:
        raise DomainError(f"r = {r} outside 1..{k}")
    return d[r - 1]


def exact_nearest(G: CodeMatrix, v, field: GF | None = None) -> tuple[np.ndarray, int]:
    """Closest codeword to v and its distance; ties go to the smallest message
    in lexicographic order."""
    F = field or G.field
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (G.n,):
        raise DomainError(f"vector length {v.shape} does not match n = {G.n}")
    Q, k = F.order, G.k
    total = Q ** k
    if total > ENUM_BUDGET:
        raise BudgetError(f"{Q}^{k} codewords exceed the 2^24 budget")
    place = Q ** np.arange(k - 1, -1, -1, dtype=np.int64)  # first coordinate most significant
    best_cw, best_dist = None, G.n + 1
    chunk = max(1, (1 << 20) // max(G.n, 1))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // place) % Q
        cw = np.zeros((len(idx), G.n), dtype=np.int64)
        for i in range(k):
            cw = F.add(cw, F.mul(msgs[:, i][:, None], G.rows[i][None, :]))
        dist = np.count_nonzero(cw != v, axis=1)
        j = int(np.argmin(dist))
        if dist[j] < best_dist:
            best_cw, best_dist = cw[j], int(dist[j])
    return best_cw, best_dist
