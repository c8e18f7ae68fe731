"""Typicality and N-typicality, decided from the root datum and from marks.

Both deciders are exact: a condition ``(k Lambda + rho, alpha) != 0`` for all
k >= 1 is settled by solving the linear equation in k, never by scanning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidAlgebraError
from .exactq import Scalar, as_rational
from .rootdata import AlgebraSpec, Root, RootDatum
from .weights import Weight


@dataclass(frozen=True)
class TypicalityReport:
    typical: bool
    n_typical: bool
    # (alpha, smallest k >= 1 with (k Lambda + rho, alpha) = 0)
    atypical_roots: tuple[tuple[Root, int], ...]


def smallest_vanishing_multiple(slope: Scalar, const: Scalar) -> Optional[int]:
    """Smallest integer k >= 1 with ``slope * k + const == 0``, or None."""
    slope, const = as_rational(slope), as_rational(const)
    if slope == 0:
        return 1 if const == 0 else None
    k = -const / slope
    if k.denominator == 1 and k >= 1:
        return int(k)
    return None


def is_n_typical(datum: RootDatum, w: Weight) -> TypicalityReport:
    bad = []
    for alpha in datum.delta1_bar_plus:
        k = smallest_vanishing_multiple(datum.pair(w.coords, alpha.coords), datum.pair(datum.rho, alpha.coords))
        if k is not None:
            bad.append((alpha, k))
    return TypicalityReport(
        typical=not any(k == 1 for _, k in bad),
        n_typical=not bad,
        atypical_roots=tuple(bad),
    )


def is_typical(datum: RootDatum, w: Weight) -> bool:
    lam_rho = [a + b for a, b in zip(w.coords, datum.rho)]
    return all(datum.pair(lam_rho, alpha.coords) != 0 for alpha in datum.delta1_bar_plus)


def atypical_roots_at(datum: RootDatum, w: Weight) -> list[Root]:
    """Roots of the odd isotropic positive system with (Lambda + rho, alpha) = 0."""
    lam_rho = [a + b for a, b in zip(w.coords, datum.rho)]
    return [alpha for alpha in datum.delta1_bar_plus if datum.pair(lam_rho, alpha.coords) == 0]


# ---------------------------------------------------------------------------
# per-family criteria in terms of marks
# ---------------------------------------------------------------------------
#
# Each condition is a pair (diff, c) read as "diff != c / k for every k >= 1",
# i.e. "diff * k - c != 0".


def _fails(diff: Fraction, c: Fraction) -> bool:
    return smallest_vanishing_multiple(diff, -c) is not None


class _Marks:
    """1-based access with the empty-sum convention sum_{t=r}^{s} = 0 for s < r."""

    def __init__(self, marks: Sequence[Scalar]):
        self.a = [as_rational(x) for x in marks]

    def __getitem__(self, t: int) -> Fraction:
        return self.a[t - 1]

    def sum(self, r: int, s: int) -> Fraction:
        return sum((self.a[t - 1] for t in range(r, s + 1)), Fraction(0))


def _conditions_A(m: int, n: int, a: _Marks):
    for i in range(1, m + 2):
        for j in range(m + 1, m + n + 2):
            diff = a[m + 1] - a.sum(m + 2, j) + a.sum(i, m)
            yield diff, Fraction(i + j - 2 * m - 2)


def _conditions_C(n: int, a: _Marks):
    for i in range(1, n):
        yield a[1] - a.sum(2, i), Fraction(i - 1)
        yield a[1] - a.sum(2, i) - 2 * a.sum(i + 1, n), Fraction(2 * n - i - 1)


def _conditions_B(m: int, n: int, a: _Marks):
    # conditions of the form "X + c'/k != 0", i.e. X != -c'/k
    for i in range(1, n + 1):
        for j in range(n, m + n):
            x1 = a.sum(i, n) - a.sum(n + 1, j)
            yield x1, Fraction(i + j - 2 * n)
            x2 = x1 - 2 * a.sum(j + 1, m + n - 1) - a[m + n]
            yield x2, Fraction(i - j + 2 * m - 1)


# Third D(m,n) family, roots delta_i + eps_j: evaluating the definition gives
# the constant (-i + j - 2m + 2)/k.  Dropping the +2 would contradict both the
# definition and the D(2,1;1) = D(2,1) list.  j runs over n..m+n-2.
D_THIRD_FAMILY_SHIFT = 2


def _conditions_D(m: int, n: int, a: _Marks, third_shift: int = D_THIRD_FAMILY_SHIFT):
    for i in range(1, n + 1):
        for j in range(n, m + n):
            yield a.sum(i, n) - a.sum(n + 1, j), Fraction(i + j - 2 * n)
    for i in range(1, n + 1):
        x = a.sum(i, n) - a.sum(n + 1, m + n - 2) - a[m + n]
        yield x, Fraction(m + i - n - 1)
    for i in range(1, n + 1):
        for j in range(n, m + n - 1):
            x = a.sum(i, n) - a.sum(n + 1, j) - 2 * a.sum(j + 1, m + n - 2) - a[m + n - 1] - a[m + n]
            yield x, Fraction(i - j + 2 * m - third_shift)


def _conditions_D21(alpha: Fraction, a: _Marks):
    yield a[1], Fraction(0)
    yield a[1] - a[2], Fraction(1)
    yield a[1] - alpha * a[3], alpha
    yield a[1] - a[2] - alpha * a[3], alpha + 1


_G3 = [((0, 0), 0), ((1, 0), 1), ((1, 3), 4), ((3, 3), 6), ((3, 6), 9), ((4, 6), 10)]
_F4 = [
    ((0, 0, 0), 0),
    ((1, 0, 0), 1),
    ((1, 2, 0), 3),
    ((2, 2, 0), 4),
    ((1, 2, 2), 5),
    ((2, 2, 2), 6),
    ((2, 4, 2), 8),
    ((3, 4, 2), 9),
]


def _conditions_linear(table, a: _Marks):
    # a_1 != sum_t coeff_t a_{t+2} + c/k
    for coeffs, c in table:
        diff = a[1] - sum((co * a[t + 2] for t, co in enumerate(coeffs)), Fraction(0))
        yield diff, Fraction(c)


def _rank(spec: AlgebraSpec) -> int:
    f = spec.family
    if f == "A":
        return spec.m + spec.n + 1
    if f in ("B", "D"):
        return spec.m + spec.n
    if f == "C":
        return spec.n
    return {"D21": 3, "G3": 3, "F4": 4}[f]


def family_conditions(spec: AlgebraSpec, marks: Sequence[Scalar]) -> list[tuple[Fraction, Fraction]]:
    """All (diff, c) conditions of the family's mark criteria."""
    if len(marks) != _rank(spec):
        raise InvalidAlgebraError(f"{spec.name} takes {_rank(spec)} marks, got {len(marks)}")
    a = _Marks(marks)
    f = spec.family
    if f == "A":
        return list(_conditions_A(spec.m, spec.n, a))
    if f == "B":
        return [] if spec.m == 0 else list(_conditions_B(spec.m, spec.n, a))
    if f == "C":
        return list(_conditions_C(spec.n, a))
    if f == "D":
        return list(_conditions_D(spec.m, spec.n, a))
    if f == "D21":
        return list(_conditions_D21(spec.alpha, a))
    if f == "G3":
        return list(_conditions_linear(_G3, a))
    return list(_conditions_linear(_F4, a))


def family_criteria_n_typical(spec: AlgebraSpec, marks: Sequence[Scalar]) -> bool:
    """N-typicality from the family's inequality list on the numerical marks."""
    return not any(_fails(diff, c) for diff, c in family_conditions(spec, marks))
