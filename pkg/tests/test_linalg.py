import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chaincover.errors import DomainError
from chaincover.field import field_for_order
from chaincover.linalg import (
    CodeMatrix, combine, in_row_space, joint_support, matmul, parity_check, rank,
    row_reduce, row_space_equal, solve, submatrix_columns, support, weight,
)


def _span(M):
    F = M.field
    out = set()
    for coeffs in itertools.product(range(F.order), repeat=M.k):
        out.add(tuple(combine(F, coeffs, M.rows).tolist()))
    return out


def test_rank_and_rref():
    F = field_for_order(2).base
    M = CodeMatrix(F, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    R, rk = row_reduce(M)
    assert rk == 2 == rank(M)
    assert R.rows.tolist() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]


def test_parity_check_is_orthogonal_complement():
    F = field_for_order(3).base
    G = CodeMatrix(F, [[1, 0, 2, 1], [0, 1, 1, 2]])
    H = parity_check(G)
    assert H.k == 2
    assert not matmul(F, G.rows, H.rows.T).any()
    assert rank(H) == 2


def test_parity_check_rejects_dependent_rows():
    F = field_for_order(2).base
    with pytest.raises(DomainError):
        parity_check(CodeMatrix(F, [[1, 1], [1, 1]]))


def test_solve_and_membership():
    F = field_for_order(4).base
    G = CodeMatrix(F, [[1, 2, 3, 0], [0, 1, 1, 1]])
    v = combine(F, [3, 2], G.rows)
    assert solve(G, v).tolist() == [3, 2]
    assert in_row_space(G, v)
    assert not in_row_space(G, [1, 0, 0, 0])
    assert solve(G, [1, 0, 0, 0]) is None


def test_row_space_equal_by_enumeration():
    F = field_for_order(3).base
    A = CodeMatrix(F, [[1, 2, 0], [0, 1, 1]])
    B = CodeMatrix(F, [[1, 0, 1], [0, 2, 2]])
    assert row_space_equal(A, B) == (_span(A) == _span(B))
    C = CodeMatrix(F, [[1, 0, 0], [0, 1, 0]])
    assert row_space_equal(A, C) == (_span(A) == _span(C))


def test_support_helpers():
    assert support([0, 3, 0, 1]) == frozenset({2, 4})
    assert joint_support([[0, 1, 0], [1, 0, 0]]) == frozenset({1, 2})
    assert weight([0, 2, 2, 0]) == 2
    F = field_for_order(2).base
    M = CodeMatrix(F, [[1, 0, 1], [0, 1, 1]])
    assert submatrix_columns(M, [3, 1]).rows.tolist() == [[1, 1], [0, 1]]  # ascending


def test_codematrix_checks_entries():
    F = field_for_order(3).base
    with pytest.raises(DomainError):
        CodeMatrix(F, [[0, 3]])
    M = CodeMatrix(F, [[0, 1]])
    with pytest.raises(ValueError):
        M.rows[0, 0] = 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 4), st.integers(1, 7), st.data())
def test_rank_nullity(q, k, n, data):
    F = field_for_order(q).base
    rows = data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
                              min_size=k, max_size=k))
    M = CodeMatrix(F, rows)
    R, rk = row_reduce(M)
    assert rk == rank(R) <= min(k, n)
    assert row_space_equal(M, R)
    if rk == k and k < n:
        H = parity_check(M)
        assert H.k == n - k and rank(H) == n - k
        assert not matmul(F, M.rows, H.rows.T).any()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=5, max_size=5), min_size=1, max_size=4))
def test_joint_support_bounds(vs):
    J = joint_support(vs)
    assert max(weight(v) for v in vs) <= len(J) <= sum(weight(v) for v in vs)
