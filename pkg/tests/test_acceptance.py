"""Acceptance criteria.  Each test prints one PASS/FAIL line; all comparisons are exact."""

import random
from fractions import Fraction as F
from math import factorial

import pytest

from superdim.atypical import atypical_dim_sequence, classify_atypicality
from superdim.cli import scan_rows
from superdim.combinatorics import c_coefficients, c_coefficients_bernoulli, eulerian_triangle
from superdim.errors import DegenerateFormError
from superdim.exactq import Poly, RationalSeries, expand
from superdim.hilbert import dim_typical, hilbert_polynomial, series_via_operator, series_via_theorem
from superdim.rootdata import AlgebraSpec, build_root_datum, parse_algebra
from superdim.typicality import family_criteria_n_typical, is_n_typical
from superdim.weights import format_vector, parse_coords, weight_from_marks
from test_rootdata import all_specs


@pytest.fixture
def verdict(capsys):
    def emit(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}{': ' + detail if detail else ''}")
        assert ok, detail

    return emit


def P(*coeffs):
    return Poly(coeffs)


def test_criterion_1_sl21_table(verdict):
    d = build_root_datum(parse_algebra("sl(2|1)"))
    table = {
        0: (RationalSeries(P(4), 1), [4, 4, 4, 4, 4]),
        1: (RationalSeries(P(4), 2), [4, 8, 12, 16, 20]),
        2: (RationalSeries(P(4) * P(1, 1), 2), [4, 12, 20, 28, 36]),
        3: (RationalSeries(P(4) * P(1, 2), 2), [4, 16, 28, 40, 52]),
        4: (RationalSeries(P(4) * P(1, 3), 2), [4, 20, 36, 52, 68]),
        5: (RationalSeries(P(4) * P(1, 4), 2), [4, 24, 44, 64, 84]),
    }
    bad = []
    for a1, (series, coeffs) in table.items():
        w = weight_from_marks(d, [a1, 1])
        th, op = series_via_theorem(d, w), series_via_operator(d, w)
        if not (th == op == series and expand(op, 5) == coeffs):
            bad.append(a1)
    verdict("1 sl(2|1) golden table, 6 rows", not bad, f"mismatched a1 {bad}" if bad else "")


# (weight, marks, numerator, pole order, first four coefficients)
SL32_TABLE = [
    ("2e1+2e2+e3-d2", (0, 1, 1, 1), P(64) * P(1, 2), 4, [64, 384, 1152, 2560]),
    ("3e1+3e2+e3-d2", (0, 2, 1, 1), P(64) * P(1, 8, 3), 4, [64, 768, 2880, 7168]),
    ("3e1+3e2+e3-2d2", (0, 2, 1, 2), P(64) * P(1, 14, 9), 4, [64, 1152, 4800, 12544]),
    ("2e1+e2+e3-2d2", (1, 0, 1, 2), P(64) * P(1, 5), 4, [64, 576, 1920, 4480]),
    ("3e1+2e2+e3-d2", (1, 1, 1, 1), P(64) * P(1, 10, 1) * P(1, 1), 5, [64, 1024, 5184, 16384]),
    ("4e1+3e2+e3-d2", (1, 2, 1, 1), P(64) * P(1, 25, 40, 6), 5, [64, 1920, 11520, 39424]),
    ("4e1+3e2+e3-2d2", (1, 2, 1, 2), P(64) * P(1, 38, 9) * P(1, 2), 5, [64, 2880, 19200, 68992]),
    ("3e1+e2+e3-2d2", (2, 0, 1, 2), P(64) * P(1, 14, 9), 4, [64, 1152, 4800, 12544]),
    ("4e1+2e2+e3-d2", (2, 1, 1, 1), P(64) * P(1, 25, 40, 6), 5, [64, 1920, 11520, 39424]),
    ("5e1+3e2+e3-d2", (2, 2, 1, 1), P(64) * P(1, 49, 115, 27), 5, [64, 3456, 24000, 87808]),
    ("5e1+3e2+e3-2d2", (2, 2, 1, 2), P(64) * P(1, 76, 230, 76, 1), 5, [64, 5184, 40000, 153664]),
]


def test_criterion_2_sl32_scan(verdict):
    d = build_root_datum(parse_algebra("sl(3|2)"))
    rows = scan_rows(d, ["a1=0..2", "a2=0..2", "a4=0..2"], ["a3=1"], 4)
    got = [
        (format_vector(d.labels, r.weight.coords), r.marks, r.series.numerator, r.series.pole_order, r.expansion)
        for r in rows
    ]
    ok = len(got) == 11 and got == SL32_TABLE
    verdict("2 sl(3|2) scan reproduces the 11-row table", ok, f"{len(got)} rows")


def test_criterion_3_sl41_typical(verdict):
    d = build_root_datum(parse_algebra("sl(4|1)"))
    w = parse_coords(d, "e1+e2+d1")
    h = hilbert_polynomial(d, w)
    factors = sorted(f for f in h.factors if f[1] != 0)
    ok = (
        factors == [(1, F(1, 3)), (1, F(1, 2)), (1, F(1, 2)), (1, 1)]
        and all(f == (1, 0) for f in h.factors if f[1] == 0)
        and h.prefactor == 16
        and series_via_operator(d, w) == series_via_theorem(d, w) == RationalSeries(P(16, 16), 5)
    )
    verdict("3 sl(4|1) e1+e2+d1: factors, prefactor 16, 16(1+q)/(1-q)^5", ok)


def test_criterion_4_singly_atypical(verdict):
    d = build_root_datum(parse_algebra("sl(4|1)"))
    w = parse_coords(d, "e1+e2")
    cls = classify_atypicality(d, w)
    dims = atypical_dim_sequence(d, w, 6)
    bounds = expand(series_via_operator(d, w), 6)
    ok = (
        cls.kind == "singly_atypical"
        and cls.site.root.coords == (0, 0, 0, 1, -1)
        and dims == [1, 11, 46, 130, 295, 581]
        and bounds == [16, 96, 320, 800, 1680, 3136]
        and all(b >= a for a, b in zip(dims, bounds))
    )
    verdict("4 sl(4|1) e1+e2: singly atypical at e4-d1, dims and bounds", ok, f"dims {dims}")


def test_criterion_5_typicality_examples(verdict):
    d = build_root_datum(parse_algebra("sl(2|1)"))
    a = is_n_typical(d, weight_from_marks(d, [1, -1]))
    b = is_n_typical(d, weight_from_marks(d, [0, F(-1, 2)]))
    ok = a.n_typical and b.typical and not b.n_typical and [k for _, k in b.atypical_roots] == [2]
    verdict("5 sl(2|1) (1,-1) N-typical; (0,-1/2) typical, fails at k=2", ok)


def equivalence_specs():
    out = [s for s in all_specs() if s.family != "D21"]
    out += [AlgebraSpec("D21", alpha=a) for a in (F(1, 2), F(1), F(2))]
    return out


def test_criterion_6_family_criteria_equivalence(verdict):
    rng = random.Random(2024)
    vals = [F(x) for x in range(-3, 4)] + [F(1, 2), F(-1, 2), F(1, 3), F(-2, 3), F(3, 2), F(4, 3)]
    total = 0
    bad = []
    for spec in equivalence_specs():
        d = build_root_datum(spec)
        # small integer grid first, then random rational marks
        grid = [[(i // 5**t) % 5 - 1 for t in range(d.rank)] for i in range(min(5**d.rank, 200))]
        samples = grid + [[rng.choice(vals) for _ in range(d.rank)] for _ in range(500 - len(grid))]
        for marks in samples:
            total += 1
            if family_criteria_n_typical(spec, marks) != is_n_typical(d, weight_from_marks(d, marks)).n_typical:
                bad.append((spec.name, marks))
    verdict(
        "6 family criteria agree with the definition",
        not bad,
        f"{total} cases over {len(equivalence_specs())} algebras, {len(bad)} disagreements",
    )


def test_criterion_7_closed_forms(verdict):
    rng = random.Random(7)
    specs = []
    for s in all_specs():
        d = build_root_datum(s)
        try:
            series_via_theorem(d, weight_from_marks(d, [0] * d.rank))
            specs.append(s)
        except DegenerateFormError:
            pass
    checked = 0
    bad = []
    while checked < 240:
        d = build_root_datum(specs[checked % len(specs)])
        marks = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(d.rank)]
        w = weight_from_marks(d, marks)
        op = series_via_operator(d, w)
        if series_via_theorem(d, w) != op or expand(op, 8) != [dim_typical(d, w, k) for k in range(8)]:
            bad.append((d.spec.name, marks))
        checked += 1
    verdict("7 theorem form = operator form = dim_typical", not bad, f"{checked} weights, {len(bad)} mismatches")


def test_criterion_8_combinatorics(verdict):
    rows = eulerian_triangle(13)
    ok = True
    for n in range(1, 13):
        row = rows[n]
        ok &= sum(row) == factorial(n)
        ok &= row == row[::-1]
        prev = rows[n - 1]
        for k in range(n):
            p = lambda j: prev[j] if 0 <= j < len(prev) else 0
            ok &= row[k] == (k + 1) * p(k) + (n - k) * p(k - 1)
    ok &= c_coefficients(10) == c_coefficients_bernoulli(10)
    verdict("8 Eulerian rows n<=12 and C_i, i<=10", bool(ok))


def test_criterion_9_B02(verdict):
    spec = AlgebraSpec("B", 0, 2)
    d = build_root_datum(spec)
    rng = random.Random(9)
    samples = [[F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(2)] for _ in range(500)]
    ok = all(is_n_typical(d, weight_from_marks(d, m)).n_typical for m in samples)
    ok &= all(family_criteria_n_typical(spec, m) for m in samples)
    verdict("9 B(0,2) weights are all N-typical", ok, f"{len(samples)} samples")
