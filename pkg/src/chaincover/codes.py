"""A few small named codes used by the sweeps, demos and tests."""

from __future__ import annotations

import numpy as np

from .chain import ChainedMatrix, canonicalize_chained
from .field import field_for_order
from .linalg import CodeMatrix


def hamming74() -> ChainedMatrix:
    """[7,4] cyclic Hamming code, generator 1 + x + x^3.

    Consecutive shifts of the generator polynomial realize its GHWs (3, 5, 6, 7).
    """
    g = [1, 1, 0, 1]
    rows = [[0] * i + g + [0] * (3 - i) for i in range(4)]
    return canonicalize_chained(CodeMatrix(field_for_order(2).base, rows))


def repetition(n: int, q: int = 2) -> ChainedMatrix:
    return canonicalize_chained(CodeMatrix(field_for_order(q).base, np.ones((1, n))))


def full_space(n: int, q: int = 2) -> ChainedMatrix:
    return canonicalize_chained(CodeMatrix(field_for_order(q).base, np.eye(n)))
