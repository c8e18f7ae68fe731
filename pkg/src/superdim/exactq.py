"""Exact rationals, univariate polynomials over Q, and series with poles at q = 1.

Scalars are :class:`fractions.Fraction`.  Every generating function handled by
this package has the form ``P(q) / (1 - q)**m``; :class:`RationalSeries` stores
exactly that, reduced so that ``P(1) != 0`` whenever ``m > 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``t**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Poly":
        return cls((0,) * degree + (c,))

    @classmethod
    def from_roots_form(cls, factors: Iterable[tuple[Scalar, Scalar]]) -> "Poly":
        """Product of affine factors ``(a + b t)`` given as ``(a, b)`` pairs."""
        out = cls.const(1)
        for a, b in factors:
            out = out * cls((a, b))
        return out

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other):
        other = _coerce_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _coerce_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = as_rational(c)
        return Poly(tuple(c * a for a in self.coeffs))

    def __call__(self, x: Scalar) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by ``t**k``."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def divmod_one_minus_q(self) -> tuple["Poly", Fraction]:
        """Return ``(s, r)`` with ``self = (1 - q) * s + r`` and ``r = self(1)``."""
        if self.is_zero():
            return Poly(), Fraction(0)
        # self = (1-q) s + r  <=>  -self = (q-1) s - r; synthetic division by (q - 1)
        neg = [-c for c in self.coeffs]
        n = len(neg) - 1
        quot = [Fraction(0)] * n
        acc = Fraction(0)
        for i in range(n, 0, -1):
            acc = neg[i] + acc
            quot[i - 1] = acc
        rem = neg[0] + acc
        return Poly(tuple(quot)), -rem

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def content(self) -> Fraction:
        """Positive rational gcd of the coefficients (0 for the zero polynomial)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def _coerce_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


ONE_MINUS_Q = Poly((1, -1))


def one_minus_q_power(m: int) -> Poly:
    return Poly(tuple((-1) ** i * comb(m, i) for i in range(m + 1)))


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / (1 - q)**pole_order``.  Build through :func:`normalize`."""

    numerator: Poly
    pole_order: int

    def __post_init__(self):
        if self.pole_order < 0:
            raise ValueError("pole_order must be nonnegative")

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        m = max(self.pole_order, other.pole_order)
        a = self.numerator * one_minus_q_power(m - self.pole_order)
        b = other.numerator * one_minus_q_power(m - other.pole_order)
        return normalize(a + b, m)

    def scale(self, c: Scalar) -> "RationalSeries":
        return normalize(self.numerator.scale(c), self.pole_order)

    def expand(self, n_terms: int) -> list[Fraction]:
        return expand(self, n_terms)

    def at_point(self, q: Scalar) -> Fraction:
        """Exact value of the rational function at ``q != 1``."""
        q = as_rational(q)
        if q == 1 and self.pole_order:
            raise ZeroDivisionError("series has a pole at q = 1")
        return self.numerator(q) / (1 - q) ** self.pole_order


def normalize(numer: Poly, pole_order: int) -> RationalSeries:
    """Cancel common factors of ``(1 - q)`` between numerator and denominator."""
    if pole_order < 0:
        raise ValueError("pole_order must be nonnegative")
    if numer.is_zero():
        return RationalSeries(Poly(), 0)
    while pole_order > 0:
        quot, rem = numer.divmod_one_minus_q()
        if rem != 0:
            break
        numer, pole_order = quot, pole_order - 1
    return RationalSeries(numer, pole_order)


def apply_q_ddq(s: RationalSeries) -> RationalSeries:
    """Apply ``q d/dq``; multiplies the k-th coefficient by k."""
    p, m = s.numerator, s.pole_order
    # d/dq [P (1-q)^-m] = [P' (1-q) + m P] (1-q)^-(m+1)
    inner = p.derivative() * ONE_MINUS_Q + p.scale(m)
    return normalize(inner.shift_up(1), m + 1)


def expand(s: RationalSeries, n_terms: int) -> list[Fraction]:
    """First ``n_terms`` Taylor coefficients at ``q = 0`` by long division."""
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    den = one_minus_q_power(s.pole_order)
    out: list[Fraction] = []
    for k in range(n_terms):
        acc = s.numerator[k]
        for j in range(1, min(k, den.degree) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc)  # den[0] == 1
    return out


def solve_exact(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> list[Fraction]:
    """Solve a square linear system over Q by Gauss-Jordan elimination.

    Raises ``ZeroDivisionError`` (wrapped by callers) when the matrix is singular.
    """
    n = len(rows)
    a = [[as_rational(x) for x in row] + [as_rational(b)] for row, b in zip(rows, rhs)]
    if any(len(r) != n + 1 for r in a):
        raise ValueError("system is not square")
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
