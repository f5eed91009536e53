import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chaincover.errors import DomainError
from chaincover.linalg import rank, row_space_equal
from chaincover.rm import (
    canonical_rep, chained_rm, evaluation_points, ghw_binary, ghw_rm, rho, rm_dimension,
    rm_generator_blocks, rm_monomial_matrix,
)

from brute import ghw_by_subcodes

GRID = [(q, r, m) for q in (2, 3, 4) for m in (1, 2, 3) for r in range(0, (q - 1) * m + 1)
        if q ** m <= 27]


def test_rho():
    assert [rho(r, 4) for r in range(5)] == [1, 5, 11, 15, 16]


def test_canonical_rep_examples():
    assert canonical_rep(7, 2, 5).pairs == ((1, 4), (0, 2), (0, 1))
    assert canonical_rep(5, 2, 3).pairs == ((1, 2), (1, 1))
    assert canonical_rep(0, 1, 3).pairs == ()
    with pytest.raises(DomainError):
        canonical_rep(12, 2, 4)


def _all_reps(t, r, m):
    """Every sequence satisfying the representation constraints, by exhaustive search."""
    out = []

    def rec(remaining, prev_r, i, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        slack = m - r - i + 1
        for ri in range(prev_r, -1, -1):
            mi = ri + slack
            if mi >= 0 and 0 < rho(ri, mi) <= remaining:
                rec(remaining - rho(ri, mi), ri, i + 1, acc + [(ri, mi)])

    rec(t, r, 1, [])
    return out


@pytest.mark.parametrize("r, m", [(1, 3), (2, 4), (2, 5), (3, 5), (1, 6)])
def test_canonical_rep_is_the_unique_solution(r, m):
    for t in range(1, rho(r, m) + 1):
        reps = _all_reps(t, r, m)
        assert reps == [canonical_rep(t, r, m).pairs]


@pytest.mark.parametrize("r, m", [(1, 3), (2, 3), (1, 4)])
def test_ghw_binary_against_subcode_enumeration(r, m):
    want = ghw_by_subcodes(rm_monomial_matrix(2, r, m))
    assert [ghw_binary(t, r, m) for t in range(1, rho(r, m) + 1)] == want


def test_binary_ghw_known_rows():
    # d_1 of RM(r, m) is 2^(m - r); the last one is n
    for m in range(1, 7):
        for r in range(m + 1):
            assert ghw_binary(1, r, m) == 2 ** (m - r)
            assert ghw_binary(rho(r, m), r, m) == 2 ** m


@pytest.mark.parametrize("r, m", [(r, m) for m in range(1, 7) for r in range(m + 1)])
def test_ghw_rm_matches_binary_formula(r, m):
    assert ghw_rm(2, r, m) == [ghw_binary(t, r, m) for t in range(1, rho(r, m) + 1)]


def test_dimension():
    for q, r, m in GRID:
        want = sum(1 for e in itertools.product(range(q), repeat=m) if sum(e) <= r)
        assert rm_dimension(q, r, m) == want


@pytest.mark.parametrize("q, r, m", GRID)
def test_three_constructions_span_the_same_code(q, r, m):
    A = chained_rm(q, r, m).gamma
    B = rm_generator_blocks(q, r, m)
    C = rm_monomial_matrix(q, r, m)
    assert A.k == B.k == C.k == rank(C) == rm_dimension(q, r, m)
    assert row_space_equal(A, C) and row_space_equal(B, C)


def test_rm13_matrix(rm13_gamma):
    ch = chained_rm(2, 1, 3)
    assert ch.gamma == rm13_gamma
    assert ch.d == (4, 6, 7, 8)
    assert ch.perm == tuple(range(1, 9))


def test_ternary_small():
    ch = chained_rm(3, 1, 2)
    assert ch.gamma.rows.tolist() == [
        [2, 2, 2, 1, 1, 1, 0, 0, 0],
        [2, 1, 0, 2, 1, 0, 2, 1, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
    ]
    assert ch.d == (6, 8, 9)


@pytest.mark.parametrize("q, r, m", [(3, 1, 2), (3, 2, 2), (4, 1, 2), (5, 1, 2)])
def test_ghw_rm_from_subcodes(q, r, m):
    assert ghw_rm(q, r, m) == ghw_by_subcodes(rm_monomial_matrix(q, r, m))


def test_evaluation_points_layout():
    pts = evaluation_points(2, 3)
    # the last coordinate selects the outer half: 1 first, then 0
    assert pts[:4, -1].tolist() == [1, 1, 1, 1] and pts[4:, -1].tolist() == [0, 0, 0, 0]
    assert len({tuple(p) for p in pts.tolist()}) == 8


def test_order_clipping_and_errors():
    assert chained_rm(2, 9, 3).k == 8
    with pytest.raises(DomainError):
        chained_rm(6, 1, 2)
    with pytest.raises(DomainError):
        chained_rm(2, -1, 2)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 9), st.data())
def test_canonical_rep_roundtrip(m, data):
    r = data.draw(st.integers(0, m))
    t = data.draw(st.integers(0, rho(r, m)))
    rep = canonical_rep(t, r, m)
    assert sum(rho(ri, mi) for ri, mi in rep) == t
    rs = [ri for ri, _ in rep]
    assert rs == sorted(rs, reverse=True)
    for i, (ri, mi) in enumerate(rep, start=1):
        assert mi - ri == m - r - i + 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.data())
def test_binary_ghw_strictly_increasing(m, data):
    r = data.draw(st.integers(0, m))
    d = [ghw_binary(t, r, m) for t in range(1, rho(r, m) + 1)]
    assert all(a < b for a, b in zip(d, d[1:]))
    assert comb(m, 0) == 1
