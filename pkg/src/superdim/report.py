"""Query results and their text, JSON and LaTeX renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import groupby
from typing import Any

from .exactq import Poly, RationalSeries, expand
from .hilbert import HilbertPolynomial, hilbert_polynomial, verify_consistency
from .rootdata import RootDatum
from .typicality import TypicalityReport, is_n_typical
from .weights import Dominance, Weight, format_vector, is_dominant_integral_partial, marks_of

UPPER_BOUND_NOTE = "formula values, upper bounds for atypical multiples"

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def sup(k: int) -> str:
    return str(k).translate(_SUP)


def rat_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_json(x: Fraction) -> Any:
    """Integers bare, other rationals as "p/q"."""
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SeriesParts:
    """numerator = common_factor * primitive, with primitive integral and its lowest term positive."""

    common_factor: Fraction
    primitive: Poly
    pole_order: int


def split_series(s: RationalSeries) -> SeriesParts:
    num = s.numerator
    if num.is_zero():
        return SeriesParts(Fraction(0), Poly(), s.pole_order)
    c = num.content()
    lowest = next(x for x in num.coeffs if x != 0)
    if lowest < 0:
        c = -c
    return SeriesParts(c, num.scale(1 / c), s.pole_order)


def _poly_text(p: Poly, var: str = "q", latex: bool = False) -> str:
    """Descending powers, integer coefficients: ``q⁴+76q³+230q²+76q+1``."""
    terms = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = rat_str(mag)
        else:
            power = var if i == 1 else (f"{var}^{{{i}}}" if latex else f"{var}{sup(i)}")
            body = power if mag == 1 else f"{rat_str(mag)}{power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def series_text(s: RationalSeries) -> str:
    """``4(2q+1)/(1−q)²``."""
    parts = split_series(s)
    if parts.primitive.is_zero():
        return "0"
    prim = _poly_text(parts.primitive)
    cf = parts.common_factor
    if prim == "1":
        head = rat_str(cf)
    elif cf == 1:
        head = f"({prim})" if parts.pole_order else prim
    elif cf == -1:
        head = f"-({prim})"
    else:
        head = f"{rat_str(cf)}({prim})"
    if cf.denominator != 1 and prim == "1" and parts.pole_order:
        head = f"({head})"
    if parts.pole_order == 0:
        return head
    den = "(1−q)" if parts.pole_order == 1 else f"(1−q){sup(parts.pole_order)}"
    return f"{head}/{den}"


def series_latex(s: RationalSeries) -> str:
    parts = split_series(s)
    if parts.primitive.is_zero():
        return "0"
    prim = _poly_text(parts.primitive, latex=True)
    cf = parts.common_factor
    cf_tex = rat_str(cf) if cf.denominator == 1 else f"\\frac{{{cf.numerator}}}{{{cf.denominator}}}"
    num = cf_tex if prim == "1" else f"{cf_tex} \\left({prim}\\right)"
    if parts.pole_order == 0:
        return num
    den = "1-q" if parts.pole_order == 1 else f"\\left(1-q\\right)^{{{parts.pole_order}}}"
    return f"\\frac{{{num}}}{{{den}}}"


def _ratio_factor(r: Fraction, var: str = "t") -> str:
    sign = "-" if r < 0 else "+"
    r = abs(r)
    if r == 1:
        body = var
    elif r.numerator == 1:
        body = f"{var}/{r.denominator}"
    elif r.denominator == 1:
        body = f"{r.numerator}{var}"
    else:
        body = f"{r.numerator}{var}/{r.denominator}"
    return f"(1{sign}{body})"


def h_polynomial_text(h: HilbertPolynomial) -> str:
    """``16(1+t)(1+t/2)²(1+t/3)``: constant terms folded into the leading scalar."""
    const = h.prefactor
    ratios: list[Fraction] = []
    t_power = 0
    for a, b in h.factors:
        if b == 0:
            const *= a
        elif a == 0:
            const *= b
            t_power += 1
        else:
            const *= a
            ratios.append(b / a)
    if const == 0:
        return "0"
    out = rat_str(const)
    if t_power:
        out += "t" if t_power == 1 else f"t{sup(t_power)}"
    # order factors by decreasing slope for a stable rendering
    for r, grp in groupby(sorted(ratios, reverse=True)):
        count = len(list(grp))
        out += _ratio_factor(r) + (sup(count) if count > 1 else "")
    return out


@dataclass
class QueryResult:
    algebra: str
    labels: tuple[str, ...]
    weight: Weight
    marks: tuple[Fraction, ...]
    typicality: TypicalityReport
    dominance: Dominance
    series: RationalSeries
    h_poly: HilbertPolynomial
    expansion: list[Fraction]
    warnings: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        parts = split_series(self.series)
        return {
            "algebra": self.algebra,
            "weight": format_vector(self.labels, self.weight.coords),
            "weight_coords": [rat_json(c) for c in self.weight.coords],
            "marks": [rat_json(a) for a in self.marks],
            "typicality": {
                "typical": self.typicality.typical,
                "n_typical": self.typicality.n_typical,
                "atypical_roots": [
                    {"root": format_vector(self.labels, r.coords), "k": k} for r, k in self.typicality.atypical_roots
                ],
            },
            "dominance": self.dominance.value,
            "hilbert": {
                "numerator": [rat_json(c) for c in self.series.numerator.coeffs],
                "primitive_numerator": [rat_json(c) for c in parts.primitive.coeffs],
                "pole_order": self.series.pole_order,
                "common_factor": rat_json(parts.common_factor),
            },
            "h_polynomial": h_polynomial_text(self.h_poly),
            "expansion": [rat_json(c) for c in self.expansion],
            "warnings": list(self.warnings),
        }


def build_query(datum: RootDatum, w: Weight, n_terms: int) -> QueryResult:
    """Run the consistency-checked pipeline for one weight.

    Raises ConsistencyError if the two closed forms or the coefficient check disagree.
    """
    rep = verify_consistency(datum, w, max(n_terms, 3))
    typ = is_n_typical(datum, w)
    dom, reason = is_dominant_integral_partial(datum, w)
    warnings = []
    if not typ.n_typical:
        roots = ", ".join(f"{format_vector(datum.labels, r.coords)} (k={k})" for r, k in typ.atypical_roots)
        warnings.append(f"not N-typical: atypical root {roots}; coefficients are {UPPER_BOUND_NOTE}")
    if dom is Dominance.FAIL:
        warnings.append(f"not dominant integral: {reason}")
    return QueryResult(
        algebra=datum.spec.common_name,
        labels=datum.labels,
        weight=w,
        marks=marks_of(datum, w),
        typicality=typ,
        dominance=dom,
        series=rep.series,
        h_poly=hilbert_polynomial(datum, w),
        expansion=expand(rep.series, n_terms),
        warnings=warnings,
    )


def _tuple_text(xs) -> str:
    return "(" + ",".join(rat_str(x) for x in xs) + ")"


def render_text(r: QueryResult) -> str:
    lines = [
        f"algebra     {r.algebra}",
        f"weight      {format_vector(r.labels, r.weight.coords)}",
        f"marks       {_tuple_text(r.marks)}",
        f"typical     {'yes' if r.typicality.typical else 'no'}",
        f"N-typical   {'yes' if r.typicality.n_typical else 'no'}",
        f"dominance   {r.dominance.value}",
        f"h(t)        {h_polynomial_text(r.h_poly)}",
        f"H(q)        {series_text(r.series)}",
        f"expansion   {', '.join(rat_str(c) for c in r.expansion)}",
    ]
    lines += [f"warning     {w}" for w in r.warnings]
    return "\n".join(lines)


def render_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def latex_row(r: QueryResult) -> str:
    """One table row: weight, marks, series, expansion."""
    weight = format_vector(r.labels, r.weight.coords)
    for lab in r.labels:
        weight = weight.replace(lab, f"{lab[0]}_{{{lab[1:]}}}")
    exp = " + ".join(_latex_term(c, k) for k, c in enumerate(r.expansion) if c != 0) or "0"
    exp = exp.replace("+ -", "- ")
    return f"${weight}$ & ${_tuple_text(r.marks)}$ & ${series_latex(r.series)}$ & ${exp} + \\cdots$ \\\\"


def _latex_term(c: Fraction, k: int) -> str:
    cs = rat_str(c)
    if k == 0:
        return cs
    q = "q" if k == 1 else f"q^{{{k}}}"
    return q if c == 1 else f"{cs} {q}"


def latex_table(rows: list[QueryResult]) -> str:
    body = "\n".join(latex_row(r) for r in rows)
    return (
        "\\begin{tabular}{llll}\n"
        "$\\Lambda$ & marks & Hilbert series & expansion \\\\ \\hline\n" + body + ("\n" if body else "") + "\\end{tabular}"
    )
