"""Eulerian numbers, elementary symmetric functions, Bernoulli numbers and the
coefficients C_i of ``2 e^t / (1 + e^t)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .exactq import Poly, Scalar, as_rational


def eulerian_number(n: int, k: int) -> int:
    """A(n, k): permutations of 1..n with exactly k ascents.

    Computed from the triangle recurrence; see :func:`eulerian_number_explicit`
    for the alternating-sum formula.
    """
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"A(n, k) needs n >= 1 and 0 <= k <= n-1, got ({n}, {k})")
    return _eulerian_row(n)[k]


@lru_cache(maxsize=None)
def _eulerian_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    if n == 1:
        return (1,)
    prev = _eulerian_row(n - 1)

    def p(k):
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple((k + 1) * p(k) + (n - k) * p(k - 1) for k in range(n))


def eulerian_number_explicit(n: int, k: int) -> int:
    """A(n, k) = sum_{r=0}^{k} (-1)^r C(n+1, r) (k+1-r)^n."""
    if n < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"A(n, k) needs n >= 1 and 0 <= k <= n-1, got ({n}, {k})")
    return sum((-1) ** r * comb(n + 1, r) * (k + 1 - r) ** n for r in range(k + 1))


def eulerian_triangle(n_rows: int) -> list[list[int]]:
    """Rows 0..n_rows-1; row 0 is ``[1]`` so that A_0(t) = 1."""
    return [list(_eulerian_row(n)) for n in range(n_rows)]


def eulerian_polynomial(j: int) -> Poly:
    if j < 0:
        raise ValueError("j must be nonnegative")
    return Poly(_eulerian_row(j))


def elementary_symmetric_all(values: Sequence[Scalar]) -> list[Fraction]:
    """[e_0, ..., e_d] via the expansion of prod(1 + x_i t)."""
    e = [Fraction(1)]
    for x in values:
        x = as_rational(x)
        e.append(Fraction(0))
        for j in range(len(e) - 1, 0, -1):
            e[j] += x * e[j - 1]
    return e


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{i} C(i+1, j) B_j = 0 gives B_1 = -1/2; flipped below
    b = [Fraction(1)]
    for i in range(1, n + 1):
        b.append(-sum(comb(i + 1, j) * b[j] for j in range(i)) / (i + 1))
    return tuple(b)


def bernoulli(i: int) -> Fraction:
    """Bernoulli number with B_1 = +1/2.

    This is the convention for which C_i = 2 (2^(i+1) - 1) B_(i+1) / (i + 1)
    reproduces the exponential coefficients of 2e^t/(1+e^t) at i = 0.
    """
    if i < 0:
        raise ValueError("i must be nonnegative")
    b = _bernoulli_table(i)[i]
    return -b if i == 1 else b


def c_coefficients(n: int) -> list[Fraction]:
    """[C_0, ..., C_n] with 2e^t/(1+e^t) = sum_i C_i t^i / i!.

    Ordinary coefficients come from exact power-series division of the two
    exponential series; they are then scaled by i!.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    exp_series = [Fraction(1, factorial(i)) for i in range(n + 1)]
    num = [2 * c for c in exp_series]
    den = [Fraction(1) + exp_series[0]] + exp_series[1:]
    ordinary: list[Fraction] = []
    for i in range(n + 1):
        acc = num[i] - sum(ordinary[j] * den[i - j] for j in range(i))
        ordinary.append(acc / den[0])
    return [factorial(i) * c for i, c in enumerate(ordinary)]


def c_coefficients_bernoulli(n: int) -> list[Fraction]:
    """[C_0, ..., C_n] from the closed form in Bernoulli numbers."""
    return [Fraction(2 * (2 ** (i + 1) - 1), i + 1) * bernoulli(i + 1) for i in range(n + 1)]
