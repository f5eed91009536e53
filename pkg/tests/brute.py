"""Definition-level references, deliberately naive: they share no code with
the package oracles beyond field arithmetic and row combination."""

import itertools

import numpy as np

from chaincover.linalg import combine


def codewords(G, F=None):
    F = F or G.field
    return np.array([combine(F, c, G.rows) for c in itertools.product(range(F.order), repeat=G.k)])


def radius_by_scan(G, F=None):
    """max over all words of the distance to the nearest codeword; Q^n * Q^k work."""
    F = F or G.field
    C = codewords(G, F)
    best = 0
    for word in itertools.product(range(F.order), repeat=G.n):
        dist = np.count_nonzero(C != np.array(word), axis=1).min()
        best = max(best, int(dist))
    return best


def _rref_subspaces(k, r, q):
    """Every r x k reduced row echelon matrix over a field of order q."""
    for pivots in itertools.combinations(range(k), r):
        free = [(i, j) for i in range(r) for j in range(pivots[i] + 1, k) if j not in pivots]
        for vals in itertools.product(range(q), repeat=len(free)):
            A = np.zeros((r, k), dtype=np.int64)
            for i, p in enumerate(pivots):
                A[i, p] = 1
            for (i, j), v in zip(free, vals):
                A[i, j] = v
            yield A


def ghw_by_subcodes(G):
    """d_r as the smallest support of an r-dimensional subcode, over all subcodes."""
    F = G.field
    out = []
    for r in range(1, G.k + 1):
        best = G.n
        for A in _rref_subspaces(G.k, r, F.order):
            basis = np.array([combine(F, a, G.rows) for a in A])
            best = min(best, int(np.any(basis != 0, axis=0).sum()))
        out.append(best)
    return out
