"""Singly atypical weights of sl(m|n) and their dimensions.

Here ``m`` and ``n`` count the e- and d-coordinates, so sl(4|1) has m = 4, n = 1,
and ``Lambda = sum lambda_i e_i + sum mu_j d_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .combinatorics import c_coefficients, c_coefficients_bernoulli, elementary_symmetric_all
from .errors import ConsistencyError, PreconditionError
from .rootdata import Root, RootDatum
from .typicality import atypical_roots_at
from .weights import Weight


@dataclass(frozen=True)
class AtypicalitySite:
    k: int  # 1-based e-index
    l: int  # 1-based d-index
    root: Root


@dataclass(frozen=True)
class Atypicality:
    kind: str  # "typical" | "singly_atypical" | "multiply_atypical"
    site: Optional[AtypicalitySite] = None
    count: int = 0


@dataclass(frozen=True)
class AuxVariables:
    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]


def _split(datum: RootDatum, w: Weight) -> tuple[list[Fraction], list[Fraction]]:
    lam = [c for lab, c in zip(datum.labels, w.coords) if lab.startswith("e")]
    mu = [c for lab, c in zip(datum.labels, w.coords) if lab.startswith("d")]
    return lam, mu


def _require_A(datum: RootDatum):
    if datum.spec.family != "A":
        raise PreconditionError(f"singly atypical formula is for sl(m|n) only, not {datum.spec.name}")


def classify_atypicality(datum: RootDatum, w: Weight) -> Atypicality:
    _require_A(datum)
    roots = atypical_roots_at(datum, w)
    if not roots:
        return Atypicality("typical")
    if len(roots) > 1:
        return Atypicality("multiply_atypical", count=len(roots))
    root = roots[0]
    k = l = 0
    for lab, c in zip(datum.labels, root.coords):
        if c == 1 and lab.startswith("e"):
            k = int(lab[1:])
        elif c == -1 and lab.startswith("d"):
            l = int(lab[1:])
    return Atypicality("singly_atypical", AtypicalitySite(k, l, root), 1)


def aux_variables(datum: RootDatum, w: Weight, site: AtypicalitySite) -> AuxVariables:
    lam, mu = _split(datum, w)
    k, l = site.k, site.l
    xs = tuple(lam[k - 1] - lam[i - 1] + i - k for i in range(1, len(lam) + 1) if i != k)
    ys = tuple(mu[j - 1] - mu[l - 1] + l - j for j in range(1, len(mu) + 1) if j != l)
    return AuxVariables(xs, ys)


def _weyl_product(v: list[Fraction], skip: int) -> Fraction:
    out = Fraction(1)
    n = len(v)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if skip in (i, j):
                continue
            out *= (v[i - 1] - v[j - 1] + j - i) / Fraction(j - i)
    return out


def singly_atypical_value(datum: RootDatum, w: Weight, site: AtypicalitySite, bernoulli_path: bool = False) -> Fraction:
    """Evaluate the dimension formula exactly, without integrality checks.

    C_i are the exponential coefficients of 2e^t/(1+e^t): i! times the
    coefficient of t^i.  ``bernoulli_path`` takes them from the Bernoulli form.
    """
    lam, mu = _split(datum, w)
    m, n = len(lam), len(mu)
    k, l = site.k, site.l
    aux = aux_variables(datum, w, site)
    e = elementary_symmetric_all(aux.xs + aux.ys)
    top = m + n - 2
    c = c_coefficients_bernoulli(top) if bernoulli_path else c_coefficients(top)
    total = sum((c[top - r] * e[r] for r in range(top + 1)), Fraction(0))
    sign = -1 if (n - k - l - 1) % 2 else 1
    den = factorial(m - k) * factorial(k - 1) * factorial(n - l) * factorial(l - 1)
    return 2 ** (m * n - 1) * _weyl_product(lam, k) * _weyl_product(mu, l) * Fraction(sign, den) * total


def dim_singly_atypical(datum: RootDatum, w: Weight) -> int:
    cls = classify_atypicality(datum, w)
    if cls.kind != "singly_atypical":
        detail = f" ({cls.count} atypical roots)" if cls.kind == "multiply_atypical" else ""
        raise PreconditionError(f"weight is {cls.kind.replace('_', ' ')}{detail}, not singly atypical")
    val = singly_atypical_value(datum, w, cls.site)
    if val.denominator != 1 or val <= 0:
        raise ConsistencyError(f"singly atypical formula gave {val}, not a positive integer")
    return int(val)


def atypical_dim_sequence(datum: RootDatum, w: Weight, n_terms: int) -> list[int]:
    """[1, dim V(Lambda), dim V(2 Lambda), ...] with n_terms entries."""
    _require_A(datum)
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    out = [1]
    for k in range(1, n_terms):
        wk = w * k
        cls = classify_atypicality(datum, wk)
        if cls.kind != "singly_atypical":
            raise PreconditionError(f"{k} Lambda is {cls.kind.replace('_', ' ')}, not singly atypical")
        out.append(dim_singly_atypical(datum, wk))
    return out
