"""Weights, numerical marks, and parsing of weight strings."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .errors import ParseError, SingularSystemError
from .exactq import Scalar, as_rational, solve_exact
from .rootdata import RootDatum, build_root_datum

Marks = tuple[Fraction, ...]


@dataclass(frozen=True)
class Weight:
    """Coordinates of a weight in the datum's e/d basis."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))

    @classmethod
    def zero(cls, datum: RootDatum) -> "Weight":
        return cls((0,) * datum.dim)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, c: Scalar) -> "Weight":
        c = as_rational(c)
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self):
        return len(self.coords)


def marks_of(datum: RootDatum, w: Weight) -> Marks:
    """a_i = (Lambda, h_i) for each simple root, in the distinguished order."""
    _check_dim(datum, w)
    return tuple(datum.pair(w.coords, h) for h in datum.coroots)


def supertrace_direction(datum: RootDatum) -> Weight:
    """sum(e_i) - sum(d_j); the kernel of ``marks_of`` for the A family."""
    return Weight(tuple(Fraction(-1) if lab.startswith("d") else Fraction(1) for lab in datum.labels))


def weight_from_marks(datum: RootDatum, marks: Sequence[Scalar]) -> Weight:
    """Solve ``marks_of(w) == marks``; for A(m,n) the gauge is mu_1 = 0."""
    marks = [as_rational(a) for a in marks]
    if len(marks) != datum.rank:
        raise ValueError(f"{datum.spec.name} has {datum.rank} marks, got {len(marks)}")
    inv = _marks_inverse(datum.spec)
    rhs = marks + [Fraction(0)] * (len(inv[0]) - len(marks))
    return Weight(tuple(sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv))


@lru_cache(maxsize=None)
def _marks_inverse(spec) -> tuple[tuple[Fraction, ...], ...]:
    datum = build_root_datum(spec)
    # columns of the inverse are the solutions for unit right-hand sides
    rows = [[datum.pair(_unit(datum.dim, c), h) for c in range(datum.dim)] for h in datum.coroots]
    if datum.spec.family == "A":
        rows.append([Fraction(int(c == datum.label_index("d1"))) for c in range(datum.dim)])
    try:
        cols = [solve_exact(rows, _unit(len(rows), i)) for i in range(len(rows))]
    except ZeroDivisionError:
        raise SingularSystemError(f"marks do not determine a weight for {datum.spec.name}") from None
    return tuple(tuple(col[r] for col in cols) for r in range(datum.dim))


class Dominance(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNKNOWN = "unknown"


# families for which integrality and nonnegativity of the even marks is the
# whole finite-dimensionality criterion
_COMPLETE_FAMILIES = ("A", "C")


def is_dominant_integral_partial(datum: RootDatum, w: Weight) -> tuple[Dominance, str]:
    """Necessary check a_i in Z>=0 for the even simple roots.

    Returns ``(PASS, "")`` only where that check is also sufficient, otherwise
    ``UNKNOWN``; ``FAIL`` carries the offending mark in the reason.
    """
    marks = marks_of(datum, w)
    for i, (a, r) in enumerate(zip(marks, datum.simple_roots), start=1):
        if r.is_odd:
            continue
        if a.denominator != 1 or a < 0:
            return Dominance.FAIL, f"even mark a{i} = {a} is not a nonnegative integer"
    if datum.spec.family in _COMPLETE_FAMILIES:
        return Dominance.PASS, ""
    return Dominance.UNKNOWN, "further finite-dimensionality conditions are not checked for this family"


def _unit(dim: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def _check_dim(datum: RootDatum, w: Weight):
    if len(w.coords) != datum.dim:
        raise ValueError(f"weight has {len(w.coords)} coordinates, {datum.spec.name} needs {datum.dim}")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_RAT = r"\d+(?:/\d+)?"
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<coef>{_RAT}|\({_RAT}\))\s*\*?\s*)?(?P<label>[a-z]+\d+)\s*"
)
_NUM_RE = re.compile(r"\s*[+-]?\d+(?:/\d+)?\s*")


def parse_rational(text: str) -> Fraction:
    if not _NUM_RE.fullmatch(text):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}") from None


def parse_marks(text: str) -> Marks:
    """``"0,1,1,1"`` or ``"0,-1/2"``."""
    parts = text.split(",")
    out = []
    pos = 0
    for p in parts:
        try:
            out.append(parse_rational(p))
        except ParseError:
            raise ParseError(f"bad mark {p.strip()!r} at position {pos}", pos) from None
        pos += len(p) + 1
    return tuple(out)


def parse_coords(datum: RootDatum, text: str) -> Weight:
    """``"2e1+2e2+e3-1d2"`` into a Weight; ``"0"`` is the zero weight."""
    if text.strip() == "0":
        return Weight.zero(datum)
    coords = [Fraction(0)] * datum.dim
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        mt = _TERM_RE.match(text, pos)
        if not mt or mt.end() == pos or (not first and mt.group("sign") is None):
            raise ParseError(f"cannot parse weight {text!r} at position {pos}", pos)
        coef = mt.group("coef")
        c = Fraction(coef.strip("()")) if coef else Fraction(1)
        if mt.group("sign") == "-":
            c = -c
        label = mt.group("label")
        if label not in datum.labels:
            raise ParseError(
                f"unknown basis vector {label!r} at position {mt.start('label')}; "
                f"{datum.spec.name} uses {', '.join(datum.labels)}",
                mt.start("label"),
            )
        coords[datum.labels.index(label)] += c
        pos = mt.end()
        first = False
    if first:
        raise ParseError("empty weight", 0)
    return Weight(tuple(coords))


def parse_weight(datum: RootDatum, text: str) -> Weight:
    """``"marks=0,1,1,1"`` or ``"coords=2e1+2e2+e3-1d2"``."""
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep or key not in ("marks", "coords"):
        raise ParseError(f"weight must start with 'marks=' or 'coords=': {text!r}", 0)
    if key == "marks":
        return weight_from_marks(datum, parse_marks(value))
    return parse_coords(datum, value)


def format_vector(labels: Sequence[str], coords: Sequence[Fraction]) -> str:
    """Linear combination with a common denominator pulled out: ``(3e1+e2-e3-3e4)/2``."""
    den = 1
    for c in coords:
        den = lcm(den, c.denominator)
    parts = []
    for lab, c in zip(labels, coords):
        if c == 0:
            continue
        k = c * den
        sign = "-" if k < 0 else "+"
        mag = abs(k)
        body = lab if mag == 1 else f"{mag}{lab}"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f"{sign}{body}"
    if den != 1:
        s = f"({s})/{den}"
    return s
