import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import superdim.hilbert as hilbert
from superdim.errors import ConsistencyError, DegenerateFormError
from superdim.exactq import Poly, RationalSeries, expand
from superdim.hilbert import (
    dim_from_series,
    dim_typical,
    hilbert_polynomial,
    series_via_operator,
    series_via_theorem,
    verify_consistency,
)
from superdim.rootdata import AlgebraSpec, build_root_datum, parse_algebra
from superdim.typicality import is_typical
from superdim.weights import Weight, parse_coords, weight_from_marks
from oracles import hook_schur_dim, partitions_in_box
from test_rootdata import all_specs

SL21 = build_root_datum(parse_algebra("sl(2|1)"))
SL32 = build_root_datum(parse_algebra("sl(3|2)"))
SL41 = build_root_datum(parse_algebra("sl(4|1)"))


def test_dim_typical_examples():
    assert dim_typical(SL21, weight_from_marks(SL21, [2, 1]), 1) == 12
    assert dim_typical(SL41, parse_coords(SL41, "e1+e2+d1"), 1) == 96
    assert dim_typical(SL21, weight_from_marks(SL21, [7, 3]), 0) == 4


def test_hilbert_polynomial_sl21():
    h = hilbert_polynomial(SL21, weight_from_marks(SL21, [F(5, 2), 1]))
    assert h.prefactor == 4
    assert h.factors == ((1, F(5, 2)),)
    assert h.expanded == Poly((4, 10))


def test_hilbert_polynomial_sl41():
    h = hilbert_polynomial(SL41, parse_coords(SL41, "e1+e2+d1"))
    assert h.prefactor == 16
    assert sorted(f for f in h.factors if f[1]) == [(1, F(1, 3)), (1, F(1, 2)), (1, F(1, 2)), (1, 1)]
    assert h.degree == 4


def test_zero_weight_is_constant():
    for spec in all_specs():
        d = build_root_datum(spec)
        h = hilbert_polynomial(d, Weight.zero(d))
        assert h.degree <= 0
        assert series_via_operator(d, Weight.zero(d)) == RationalSeries(h.expanded, 1 if h.degree == 0 else 0)


def test_theorem_form_examples():
    assert series_via_theorem(SL21, weight_from_marks(SL21, [0, 1])) == RationalSeries(Poly((4,)), 1)
    s = series_via_theorem(SL32, weight_from_marks(SL32, [2, 2, 1, 2]))
    assert s == RationalSeries(Poly((1, 76, 230, 76, 1)) * 64, 5)
    s = series_via_theorem(SL32, weight_from_marks(SL32, [1, 1, 1, 1]))
    assert s == RationalSeries(Poly((1, 10, 1)) * Poly((1, 1)) * 64, 5)


@pytest.mark.parametrize("a1", [0, 1, 2, 3, F(1, 2), F(-7, 3)])
def test_operator_form_sl21_general(a1):
    s = series_via_operator(SL21, weight_from_marks(SL21, [a1, 1]))
    expected = hilbert.normalize(Poly((1, a1 - 1)) * 4, 2)
    assert s == expected


def test_operator_form_sl41():
    assert series_via_operator(SL41, parse_coords(SL41, "e1+e2+d1")) == RationalSeries(Poly((16, 16)), 5)


def test_verify_consistency_examples():
    rep = verify_consistency(SL32, weight_from_marks(SL32, [0, 2, 1, 2]), 4)
    assert rep.coefficients == [64, 1152, 4800, 12544]
    assert rep.integrality_checked and rep.theorem_form_checked
    rep = verify_consistency(SL21, weight_from_marks(SL21, [5, 1]), 5)
    assert rep.coefficients == [4, 24, 44, 64, 84]
    with pytest.raises(ValueError):
        verify_consistency(SL21, weight_from_marks(SL21, [5, 1]), 2)


def test_verify_consistency_reports_offending_k(monkeypatch):
    real = hilbert.dim_typical
    monkeypatch.setattr(hilbert, "dim_typical", lambda d, w, k: real(d, w, k) + (k == 3))
    with pytest.raises(ConsistencyError) as info:
        verify_consistency(SL21, weight_from_marks(SL21, [5, 1]), 6)
    assert info.value.k == 3


def test_dim_from_series():
    assert dim_from_series(RationalSeries(Poly((16, 16)), 5)) == 96
    assert dim_from_series(RationalSeries(Poly((4,)), 1)) == 4
    assert dim_from_series(RationalSeries(Poly((1,)), 1)) == 1


@pytest.mark.parametrize("name", ["B(1,2)", "D(2,2)", "D(2,3)"])
def test_degenerate_theorem_form(name):
    d = build_root_datum(parse_algebra(name))
    w = weight_from_marks(d, [1] * d.rank)
    with pytest.raises(DegenerateFormError):
        series_via_theorem(d, w)
    rep = verify_consistency(d, w, 6)
    assert not rep.theorem_form_checked and rep.notes


def test_B01_dimensions():
    d = build_root_datum(AlgebraSpec("B", 0, 1))
    # osp(1|2): dimension a + 1; a = 2 is the 3-dimensional standard module
    assert [dim_typical(d, weight_from_marks(d, [a]), 1) for a in range(0, 9, 2)] == [1, 3, 5, 7, 9]


def test_B02_small_modules():
    d = build_root_datum(AlgebraSpec("B", 0, 2))
    assert dim_typical(d, weight_from_marks(d, [1, 0]), 1) == 5
    assert dim_typical(d, weight_from_marks(d, [2, 0]), 1) == 14


@pytest.mark.parametrize("m", [2, 3, 4])
def test_kac_formula_matches_hook_schur_on_typical_covariant(m):
    d = build_root_datum(AlgebraSpec("A", m - 1, 0))
    checked = 0
    for lam in partitions_in_box(m, 4):
        w = Weight(tuple(lam) + (0,))
        if is_typical(d, w):
            assert dim_typical(d, w, 1) == hook_schur_dim(lam, m)
            checked += 1
    assert checked > 0


def random_weight(d, rng, integral):
    if integral:
        marks = [rng.randint(0, 3) for _ in range(d.rank)]
    else:
        marks = [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(d.rank)]
    return weight_from_marks(d, marks)


@pytest.mark.parametrize("spec", all_specs(), ids=lambda s: s.name)
def test_two_forms_and_coefficients(spec):
    d = build_root_datum(spec)
    rng = random.Random(spec.name)
    for i in range(6):
        w = random_weight(d, rng, integral=i % 2 == 0)
        op = series_via_operator(d, w)
        try:
            assert series_via_theorem(d, w) == op
        except DegenerateFormError:
            pass
        assert expand(op, 8) == [dim_typical(d, w, k) for k in range(8)]
        h = hilbert_polynomial(d, w)
        assert op.pole_order == h.degree + 1
        assert [h(k) for k in range(8)] == expand(op, 8)


@pytest.mark.parametrize("spec", [AlgebraSpec("A", 2, 1), AlgebraSpec("G3"), AlgebraSpec("B", 1, 1)], ids=str)
def test_scaling(spec):
    d = build_root_datum(spec)
    rng = random.Random(3)
    for _ in range(5):
        w = random_weight(d, rng, integral=False)
        h = hilbert_polynomial(d, w)
        for c in (2, 3):
            assert expand(series_via_operator(d, w * c), 6) == [h(c * k) for k in range(6)]


def test_positivity_on_dominant_n_typical_A():
    d = SL32
    for marks in [(0, 1, 1, 1), (2, 2, 1, 2), (1, 0, 3, 2), (3, 1, 5, 0)]:
        rep = verify_consistency(d, weight_from_marks(d, marks), 8)
        if rep.integrality_checked:
            assert all(c.denominator == 1 and c > 0 for c in rep.coefficients[1:])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=5), min_size=4, max_size=4))
def test_forms_agree_on_arbitrary_rational_weights(marks):
    w = weight_from_marks(SL32, marks)
    assert series_via_theorem(SL32, w) == series_via_operator(SL32, w)
