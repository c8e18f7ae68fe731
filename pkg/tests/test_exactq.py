from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superdim.exactq import (
    Poly,
    RationalSeries,
    apply_q_ddq,
    as_rational,
    expand,
    normalize,
    one_minus_q_power,
    solve_exact,
)
from oracles import power_sum_coeffs

rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rats, max_size=6).map(Poly)


def test_as_rational():
    assert as_rational("-3/4") == F(-3, 4)
    assert as_rational(5) == F(5)
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


def test_poly_basics():
    p = Poly((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly().degree == -1
    assert (p * p).coeffs == (1, 4, 4)
    assert p(F(1, 2)) == 2
    assert p.derivative().coeffs == (2,)
    assert Poly.from_roots_form([(1, 1), (1, -1)]).coeffs == (1, 0, -1)
    assert Poly((F(2, 3), F(4, 9))).content() == F(2, 9)


def test_normalize_cancels_one_minus_q():
    # (1 - q)^2 (3 + q) / (1 - q)^5
    num = one_minus_q_power(2) * Poly((3, 1))
    s = normalize(num, 5)
    assert s == RationalSeries(Poly((3, 1)), 3)
    assert normalize(Poly(), 4) == RationalSeries(Poly(), 0)
    assert normalize(one_minus_q_power(3), 2) == RationalSeries(Poly((1, -1)), 0)


def test_expand_geometric():
    assert expand(RationalSeries(Poly((1,)), 1), 4) == [1, 1, 1, 1]
    assert expand(RationalSeries(Poly((16, 16)), 5), 6) == [16, 96, 320, 800, 1680, 3136]
    with pytest.raises(ValueError):
        expand(RationalSeries(Poly((1,)), 1), 0)


def test_q_ddq_powers_match_power_sums():
    s = RationalSeries(Poly((1,)), 1)
    for j in range(1, 8):
        s = apply_q_ddq(s)
        assert expand(s, 10) == power_sum_coeffs(j, 10)


@given(polys, st.integers(0, 5))
def test_normalized_invariant(p, m):
    s = normalize(p, m)
    if s.pole_order > 0:
        assert s.numerator(1) != 0
    # same power series before and after reduction
    assert expand(s, 8) == expand(RationalSeries(p, m), 8)


@given(polys, st.integers(0, 4))
def test_q_ddq_scales_coefficients(p, m):
    s = normalize(p, m)
    before = expand(s, 8)
    after = expand(apply_q_ddq(s), 8)
    assert after == [k * c for k, c in enumerate(before)]


@given(polys, st.integers(0, 4), polys, st.integers(0, 4))
def test_series_addition(p, m, r, n):
    a, b = normalize(p, m), normalize(r, n)
    assert expand(a + b, 8) == [x + y for x, y in zip(expand(a, 8), expand(b, 8))]


@given(polys)
def test_divmod_one_minus_q(p):
    s, r = p.divmod_one_minus_q()
    assert Poly((1, -1)) * s + r == p
    assert r == p(1)


def test_at_point():
    s = RationalSeries(Poly((4,)), 1)
    assert s.at_point(F(1, 2)) == 8
    with pytest.raises(ZeroDivisionError):
        s.at_point(1)


def test_solve_exact():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == [F(4, 5), F(7, 5)]
    with pytest.raises(ZeroDivisionError):
        solve_exact([[1, 2], [2, 4]], [1, 2])
