"""Shared fixtures and independent oracles used across the test suite.

The oracles here deliberately avoid the library's closed-form paths: address
values are cross-checked against truncated series, neighbor sets against the
certified graph search, and so on.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tiletopo import TileParams
from tiletopo.linalg import mat_vec
from tiletopo.numsys import Address


def series_value(addr: Address, params: TileParams, depth: int = 300):
    """Floating-point partial sums of sum_i M^{-i}(a_i, 0).

    Independent of the periodic-tail linear solve used by point_eval.  The
    slow eigenvalue of M can be as small as ~1.09 in modulus, so the depth
    is generous to make 1e-12 comparisons meaningful.
    """
    minv = [[float(x) for x in row] for row in params.matrix_inv]
    acc = [0.0, 0.0]
    col = [1.0, 0.0]
    for i in range(1, depth + 1):
        col = [
            minv[0][0] * col[0] + minv[0][1] * col[1],
            minv[1][0] * col[0] + minv[1][1] * col[1],
        ]
        d = addr.fractional_digit(i)
        acc = [acc[0] + col[0] * d, acc[1] + col[1] * d]
    # the integer part is a finite sum, no truncation involved
    m = params.matrix
    val = (Fraction(0), Fraction(0))
    for d in addr.integer_part:
        val = mat_vec(m, val)
        val = (val[0] + d, val[1])
    return (float(val[0]) + acc[0], float(val[1]) + acc[1])


def close(p, q, tol=1e-12) -> bool:
    return abs(float(p[0] - q[0])) < tol and abs(float(p[1] - q[1])) < tol


def random_address(rng: random.Random, b: int, max_pre: int = 5, max_per: int = 4) -> Address:
    pre = tuple(rng.randrange(b) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randrange(b) for _ in range(rng.randint(1, max_per)))
    return Address((), pre, per)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
