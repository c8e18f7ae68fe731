"""Kac's typical dimension formula and two closed forms of the Hilbert series.

``H(q) = sum_{k>=0} h(k) q^k`` where ``h(t) = 2^d1 prod_{a in D0+} (1 - c1(a) + cL(a) t)``.
The operator form applies ``h(q d/dq)`` to ``1/(1-q)``; the symmetric-function
form sums ``e_j * A_j(q) q / (1-q)^(j+1)``.  The operator form is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import elementary_symmetric_all, eulerian_polynomial
from .errors import ConsistencyError, DegenerateFormError, PreconditionError
from .exactq import Poly, RationalSeries, apply_q_ddq, expand, normalize
from .rootdata import RootDatum
from .typicality import is_n_typical
from .weights import Dominance, Weight, is_dominant_integral_partial


@dataclass(frozen=True)
class HilbertPolynomial:
    # (1 - c1(a), cL(a)) for each a in D0+, in the datum's order
    factors: tuple[tuple[Fraction, Fraction], ...]
    prefactor: Fraction
    expanded: Poly

    def __call__(self, t) -> Fraction:
        return self.expanded(t)

    @property
    def degree(self) -> int:
        return self.expanded.degree


def _c_values(datum: RootDatum, w: Weight) -> list[tuple[Fraction, Fraction]]:
    out = []
    for alpha in datum.delta0_plus:
        r0 = datum.pair(datum.rho0, alpha.coords)
        if r0 == 0:
            raise PreconditionError(f"(rho0, alpha) = 0 for {alpha.coords}")
        c1 = datum.pair(datum.rho1, alpha.coords) / r0
        cl = datum.pair(w.coords, alpha.coords) / r0
        out.append((1 - c1, cl))
    return out


def hilbert_polynomial(datum: RootDatum, w: Weight) -> HilbertPolynomial:
    factors = tuple(_c_values(datum, w))
    prefactor = Fraction(2) ** datum.d1
    expanded = Poly.from_roots_form(factors).scale(prefactor)
    return HilbertPolynomial(factors, prefactor, expanded)


def dim_typical(datum: RootDatum, w: Weight, k: int) -> Fraction:
    """``2^d1 prod (k Lambda + rho, a) / (rho0, a)``, straight from the definition."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    val = Fraction(2) ** datum.d1
    kl_rho = [k * x + r for x, r in zip(w.coords, datum.rho)]
    for alpha in datum.delta0_plus:
        val *= datum.pair(kl_rho, alpha.coords) / datum.pair(datum.rho0, alpha.coords)
    return val


def _power_sum_series(j: int) -> RationalSeries:
    """``sum_{k>=0} k^j q^k``; the j = 0 term is ``1/(1-q)``, not ``q/(1-q)``."""
    if j == 0:
        return RationalSeries(Poly.const(1), 1)
    return normalize(eulerian_polynomial(j).shift_up(1), j + 1)


def series_via_theorem(datum: RootDatum, w: Weight) -> RationalSeries:
    factors = _c_values(datum, w)
    if any(a == 0 for a, _ in factors):
        raise DegenerateFormError(
            f"1 - c1(a) vanishes for some even root of {datum.spec.name}; use series_via_operator"
        )
    base = Fraction(2) ** datum.d1
    for a, _ in factors:
        base *= a
    e = elementary_symmetric_all([b / a for a, b in factors])
    total = RationalSeries(Poly(), 0)
    for j, ej in enumerate(e):
        if ej:
            total = total + _power_sum_series(j).scale(ej)
    return total.scale(base)


def series_via_operator(datum: RootDatum, w: Weight) -> RationalSeries:
    h = hilbert_polynomial(datum, w).expanded
    term = RationalSeries(Poly.const(1), 1)
    total = RationalSeries(Poly(), 0)
    for j in range(h.degree + 1):
        if j:
            term = apply_q_ddq(term)
        if h[j]:
            total = total + term.scale(h[j])
    return total


def dim_from_series(s: RationalSeries) -> Fraction:
    """Coefficient of q, i.e. d/dq at q = 0."""
    return expand(s, 2)[1]


@dataclass
class ConsistencyReport:
    series: RationalSeries
    coefficients: list[Fraction]
    theorem_form_checked: bool
    integrality_checked: bool
    notes: list[str] = field(default_factory=list)


def verify_consistency(datum: RootDatum, w: Weight, n_terms: int = 8) -> ConsistencyReport:
    """Cross-check both closed forms against each other and against dim_typical."""
    if n_terms < 3:
        raise ValueError("n_terms must be at least 3")
    op = series_via_operator(datum, w)
    notes = []
    try:
        th = series_via_theorem(datum, w)
    except DegenerateFormError as exc:
        th = None
        notes.append(str(exc))
    if th is not None and th != op:
        raise ConsistencyError(f"closed forms differ: {th} vs {op}")
    coeffs = expand(op, n_terms)
    for k, c in enumerate(coeffs):
        d = dim_typical(datum, w, k)
        if c != d:
            raise ConsistencyError(f"coefficient {k} is {c}, dim_typical gives {d}", k)
    check_int = is_n_typical(datum, w).n_typical and is_dominant_integral_partial(datum, w)[0] is Dominance.PASS
    if check_int:
        for k in range(1, n_terms):
            c = coeffs[k]
            if c.denominator != 1 or c <= 0:
                raise ConsistencyError(f"dim V({k} Lambda) = {c} is not a positive integer", k)
    return ConsistencyReport(op, coeffs, th is not None, check_int, notes)
