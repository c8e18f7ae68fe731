"""Distinguished root data for the basic classical Lie superalgebras.

All vectors are tuples of Fractions in a fixed coordinate basis whose labels
are ``e1, e2, ...`` followed by ``d1, d2, ...``.  For the A-D families the form
is (e_i, e_j) = delta_ij, (d_i, d_j) = -delta_ij, (e_i, d_j) = 0.  The
exceptional families use keyed-in Gram matrices:

* ``D(2,1;a)``: e1, e2, e3 with diag(-(1+a)/2, 1/2, a/2)
* ``F(4)``: e1, e2, e3 (the so(7) part) and d1 (the sl(2) part), diag(1, 1, 1, -3)
* ``G(3)``: e1, e2 spanning the G2 part (eps3 = -e1 - e2, (eps_i, eps_j) = 1 - 3 delta_ij)
  and d1 with (d1, d1) = 2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

from .errors import InvalidAlgebraError, ParseError
from .exactq import as_rational

Vector = tuple[Fraction, ...]

FAMILIES = ("A", "B", "C", "D", "D21", "F4", "G3")


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    m: int = 0
    n: int = 0
    alpha: Optional[Fraction] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidAlgebraError(f"unknown family {self.family!r}")
        f, m, n = self.family, self.m, self.n
        if f in ("A", "B", "D") and (m < 0 or n < 0):
            raise InvalidAlgebraError("parameters must be nonnegative")
        if f == "A" and m == n:
            raise InvalidAlgebraError(f"A({m},{n}) requires m != n")
        if f == "B" and n < 1:
            raise InvalidAlgebraError("B(m,n) requires n >= 1")
        if f == "C" and n < 2:
            raise InvalidAlgebraError("C(n) requires n >= 2")
        if f == "D" and (m < 2 or n < 1):
            raise InvalidAlgebraError("D(m,n) requires m >= 2 and n >= 1")
        if f == "D21":
            if self.alpha is None:
                raise InvalidAlgebraError("D(2,1;alpha) needs alpha")
            object.__setattr__(self, "alpha", as_rational(self.alpha))
            if self.alpha in (0, -1):
                raise InvalidAlgebraError("D(2,1;alpha) requires alpha not in {0, -1}")

    @property
    def name(self) -> str:
        f = self.family
        if f == "A":
            return f"A({self.m},{self.n})"
        if f == "B":
            return f"B({self.m},{self.n})"
        if f == "C":
            return f"C({self.n})"
        if f == "D":
            return f"D({self.m},{self.n})"
        if f == "D21":
            return f"D(2,1;{self.alpha})"
        return {"F4": "F(4)", "G3": "G(3)"}[f]

    @property
    def common_name(self) -> str:
        f, m, n = self.family, self.m, self.n
        if f == "A":
            return f"sl({m + 1}|{n + 1})"
        if f == "B":
            return f"osp({2 * m + 1}|{2 * n})"
        if f == "C":
            return f"osp(2|{2 * n - 2})"
        if f == "D":
            return f"osp({2 * m}|{2 * n})"
        return self.name


@dataclass(frozen=True)
class Root:
    coords: Vector
    parity: str  # "even" | "odd"

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"


@dataclass(frozen=True)
class RootDatum:
    spec: AlgebraSpec
    labels: tuple[str, ...]
    form: tuple[Vector, ...]
    simple_roots: tuple[Root, ...]
    delta0_plus: tuple[Root, ...]
    delta1_plus: tuple[Root, ...]
    # isotropic odd simple roots have coroot = scale * alpha; the scale follows
    # Kac's normalization of the distinguished Cartan matrix
    odd_coroot_scale: Fraction = Fraction(1)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def d0(self) -> int:
        return len(self.delta0_plus)

    @property
    def d1(self) -> int:
        return len(self.delta1_plus)

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return pairing(self, x, y)

    @cached_property
    def delta1_bar_plus(self) -> tuple[Root, ...]:
        evens = {r.coords for r in self.delta0_plus}
        evens |= {_neg(r.coords) for r in self.delta0_plus}
        return tuple(r for r in self.delta1_plus if _scale(r.coords, 2) not in evens)

    @cached_property
    def rho0(self) -> Vector:
        return _half_sum(self.delta0_plus, self.dim)

    @cached_property
    def rho1(self) -> Vector:
        return _half_sum(self.delta1_plus, self.dim)

    @cached_property
    def rho(self) -> Vector:
        return tuple(a - b for a, b in zip(self.rho0, self.rho1))

    @cached_property
    def coroots(self) -> tuple[Vector, ...]:
        """h_i as vectors, so that the mark a_i is ``(Lambda, h_i)``."""
        out = []
        for r in self.simple_roots:
            norm = self.pair(r.coords, r.coords)
            if norm == 0:
                out.append(_scale(r.coords, self.odd_coroot_scale))
            else:
                out.append(_scale(r.coords, Fraction(2) / norm))
        return tuple(out)

    @cached_property
    def odd_simple_index(self) -> int:
        """0-based position of the (unique) odd simple root."""
        return next(i for i, r in enumerate(self.simple_roots) if r.is_odd)

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParseError(f"unknown basis vector {label!r} for {self.spec.name}") from None


def pairing(datum: RootDatum, x: Sequence, y: Sequence) -> Fraction:
    """The invariant form (x, y) in the datum's coordinates."""
    if len(x) != datum.dim or len(y) != datum.dim:
        raise ValueError(f"expected vectors of length {datum.dim}, got {len(x)} and {len(y)}")
    g = datum.form
    total = Fraction(0)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = g[i]
        for j, yj in enumerate(y):
            if yj and row[j]:
                total += xi * row[j] * yj
    return total


def _neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def _scale(v: Sequence, c) -> Vector:
    return tuple(Fraction(c) * a for a in v)


def _half_sum(roots: Sequence[Root], dim: int) -> Vector:
    acc = [Fraction(0)] * dim
    for r in roots:
        for i, c in enumerate(r.coords):
            acc[i] += c
    return tuple(a / 2 for a in acc)


def _diag(entries: Sequence) -> tuple[Vector, ...]:
    n = len(entries)
    return tuple(
        tuple(as_rational(entries[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


class _Basis:
    """Helper for writing roots as sums of named unit vectors."""

    def __init__(self, labels: Sequence[str]):
        self.labels = tuple(labels)
        self.index = {lab: i for i, lab in enumerate(labels)}

    def vec(self, *terms) -> Vector:
        v = [Fraction(0)] * len(self.labels)
        for coef, lab in terms:
            v[self.index[lab]] += as_rational(coef)
        return tuple(v)

    def root(self, parity: str, *terms) -> Root:
        return Root(self.vec(*terms), parity)


def _labels(n_e: int, n_d: int) -> list[str]:
    return [f"e{i}" for i in range(1, n_e + 1)] + [f"d{j}" for j in range(1, n_d + 1)]


def _build_A(m: int, n: int):
    p, q = m + 1, n + 1
    b = _Basis(_labels(p, q))
    e = lambda i: f"e{i}"  # noqa: E731
    d = lambda j: f"d{j}"  # noqa: E731
    simple = [b.root("even", (1, e(i)), (-1, e(i + 1))) for i in range(1, p)]
    simple.append(b.root("odd", (1, e(p)), (-1, d(1))))
    simple += [b.root("even", (1, d(j)), (-1, d(j + 1))) for j in range(1, q)]
    even = [b.root("even", (1, e(i)), (-1, e(j))) for i, j in combinations(range(1, p + 1), 2)]
    even += [b.root("even", (1, d(i)), (-1, d(j))) for i, j in combinations(range(1, q + 1), 2)]
    odd = [b.root("odd", (1, e(i)), (-1, d(j))) for i in range(1, p + 1) for j in range(1, q + 1)]
    form = _diag([1] * p + [-1] * q)
    return b.labels, form, simple, even, odd, Fraction(1)


def _osp_even(b: _Basis, m: int, n: int, odd_dim: bool) -> list[Root]:
    """Positive even roots of so(2m or 2m+1) + sp(2n) on e1..em, d1..dn."""
    out = []
    for i, j in combinations(range(1, m + 1), 2):
        out.append(b.root("even", (1, f"e{i}"), (-1, f"e{j}")))
        out.append(b.root("even", (1, f"e{i}"), (1, f"e{j}")))
    if odd_dim:
        out += [b.root("even", (1, f"e{i}")) for i in range(1, m + 1)]
    for i, j in combinations(range(1, n + 1), 2):
        out.append(b.root("even", (1, f"d{i}"), (-1, f"d{j}")))
        out.append(b.root("even", (1, f"d{i}"), (1, f"d{j}")))
    out += [b.root("even", (2, f"d{i}")) for i in range(1, n + 1)]
    return out


def _build_BD(m: int, n: int, odd_dim: bool):
    b = _Basis(_labels(m, n))
    simple = [b.root("even", (1, f"d{i}"), (-1, f"d{i + 1}")) for i in range(1, n)]
    if m == 0:
        # B(0, n): the odd simple root d_n is not isotropic
        simple.append(b.root("odd", (1, f"d{n}")))
    else:
        simple.append(b.root("odd", (1, f"d{n}"), (-1, "e1")))
        simple += [b.root("even", (1, f"e{i}"), (-1, f"e{i + 1}")) for i in range(1, m)]
        if odd_dim:
            simple.append(b.root("even", (1, f"e{m}")))
        else:
            simple.append(b.root("even", (1, f"e{m - 1}"), (1, f"e{m}")))
    even = _osp_even(b, m, n, odd_dim)
    odd = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            odd.append(b.root("odd", (1, f"d{i}"), (-1, f"e{j}")))
            odd.append(b.root("odd", (1, f"d{i}"), (1, f"e{j}")))
        if odd_dim:
            odd.append(b.root("odd", (1, f"d{i}")))
    form = _diag([1] * m + [-1] * n)
    return b.labels, form, simple, even, odd, Fraction(-1)


def _build_C(n: int):
    r = n - 1
    b = _Basis(_labels(1, r))
    simple = [b.root("odd", (1, "e1"), (-1, "d1"))]
    simple += [b.root("even", (1, f"d{i}"), (-1, f"d{i + 1}")) for i in range(1, r)]
    simple.append(b.root("even", (2, f"d{r}")))
    even = _osp_even(b, 0, r, False)
    odd = []
    for i in range(1, r + 1):
        odd.append(b.root("odd", (1, "e1"), (-1, f"d{i}")))
        odd.append(b.root("odd", (1, "e1"), (1, f"d{i}")))
    form = _diag([1] + [-1] * r)
    return b.labels, form, simple, even, odd, Fraction(1)


def _build_D21(alpha: Fraction):
    b = _Basis(["e1", "e2", "e3"])
    simple = [
        b.root("odd", (1, "e1"), (-1, "e2"), (-1, "e3")),
        b.root("even", (2, "e2")),
        b.root("even", (2, "e3")),
    ]
    even = [b.root("even", (2, f"e{i}")) for i in (1, 2, 3)]
    odd = [
        b.root("odd", (1, "e1"), (s2, "e2"), (s3, "e3"))
        for s2 in (-1, 1)
        for s3 in (-1, 1)
    ]
    form = _diag([-(1 + alpha) / 2, Fraction(1, 2), alpha / 2])
    return b.labels, form, simple, even, odd, Fraction(-1)


def _build_F4():
    b = _Basis(["e1", "e2", "e3", "d1"])
    h = Fraction(1, 2)
    simple = [
        b.root("odd", (h, "d1"), (-h, "e1"), (-h, "e2"), (-h, "e3")),
        b.root("even", (1, "e3")),
        b.root("even", (1, "e2"), (-1, "e3")),
        b.root("even", (1, "e1"), (-1, "e2")),
    ]
    even = [b.root("even", (1, "d1"))] + _osp_even(b, 3, 0, True)
    odd = [
        b.root("odd", (h, "d1"), (s1 * h, "e1"), (s2 * h, "e2"), (s3 * h, "e3"))
        for s1 in (-1, 1)
        for s2 in (-1, 1)
        for s3 in (-1, 1)
    ]
    form = _diag([1, 1, 1, -3])
    return b.labels, form, simple, even, odd, Fraction(-2)


def _build_G3():
    b = _Basis(["e1", "e2", "d1"])
    eps = {1: ((1, "e1"),), 2: ((1, "e2"),), 3: ((-1, "e1"), (-1, "e2"))}

    def combo(*parts):
        # parts: (coefficient, eps index) or (coefficient, "d1")
        terms = []
        for c, what in parts:
            if what == "d1":
                terms.append((c, "d1"))
            else:
                terms += [(c * k, lab) for k, lab in eps[what]]
        return terms

    simple = [
        b.root("odd", *combo((1, "d1"), (1, 3))),
        b.root("even", *combo((1, 1))),
        b.root("even", *combo((1, 2), (-1, 1))),
    ]
    even = [
        b.root("even", *combo((2, "d1"))),
        b.root("even", *combo((1, 1))),
        b.root("even", *combo((1, 2))),
        b.root("even", *combo((-1, 3))),
        b.root("even", *combo((1, 2), (-1, 1))),
        b.root("even", *combo((1, 1), (-1, 3))),
        b.root("even", *combo((1, 2), (-1, 3))),
    ]
    odd = [b.root("odd", *combo((1, "d1")))]
    for i in (1, 2, 3):
        odd.append(b.root("odd", *combo((1, "d1"), (1, i))))
        odd.append(b.root("odd", *combo((1, "d1"), (-1, i))))
    form = (
        (Fraction(-2), Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(-2), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(2)),
    )
    return b.labels, form, simple, even, odd, Fraction(1)


_CACHE: dict[AlgebraSpec, RootDatum] = {}


def build_root_datum(spec: AlgebraSpec) -> RootDatum:
    """Root datum for the distinguished Borel subalgebra of ``spec``."""
    if spec in _CACHE:
        return _CACHE[spec]
    f = spec.family
    if f == "A":
        parts = _build_A(spec.m, spec.n)
    elif f == "B":
        parts = _build_BD(spec.m, spec.n, odd_dim=True)
    elif f == "C":
        parts = _build_C(spec.n)
    elif f == "D":
        parts = _build_BD(spec.m, spec.n, odd_dim=False)
    elif f == "D21":
        parts = _build_D21(spec.alpha)
    elif f == "F4":
        parts = _build_F4()
    else:
        parts = _build_G3()
    labels, form, simple, even, odd, scale = parts
    datum = RootDatum(
        spec=spec,
        labels=tuple(labels),
        form=tuple(tuple(row) for row in form),
        simple_roots=tuple(simple),
        delta0_plus=tuple(even),
        delta1_plus=tuple(odd),
        odd_coroot_scale=scale,
    )
    _CACHE[spec] = datum
    return datum


# ---------------------------------------------------------------------------
# parsing algebra names
# ---------------------------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_NAME_RE = re.compile(
    r"\s*(?P<head>sl|osp|A|B|C|D|F|G)\s*\(\s*(?P<args>[^()]*?)\s*\)\s*$",
)


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse ``sl(3|2)``, ``osp(3|2)``, ``A(2,1)``, ``D(2,1;1/2)``, ``F(4)``, ``G(3)``..."""
    mt = _NAME_RE.match(text)
    if not mt:
        pos = _first_bad_position(text)
        raise ParseError(f"cannot parse algebra {text!r} at position {pos}", pos)
    head, args = mt.group("head"), mt.group("args")
    args_pos = mt.start("args")

    def ints(sep_pattern, count):
        parts = re.split(sep_pattern, args)
        if len(parts) != count or not all(re.fullmatch(r"\s*\d+\s*", p) for p in parts):
            raise ParseError(
                f"expected {count} nonnegative integer(s) in {text!r} at position {args_pos}",
                args_pos,
            )
        return [int(p) for p in parts]

    try:
        if head == "sl":
            p, q = ints(r"[|,]", 2)
            if p < 1 or q < 1:
                raise InvalidAlgebraError("sl(p|q) needs p, q >= 1")
            return AlgebraSpec("A", p - 1, q - 1)
        if head == "osp":
            M, N = ints(r"[|,]", 2)
            if N < 2 or N % 2:
                raise InvalidAlgebraError("osp(M|N) needs N even and N >= 2")
            if M % 2:
                return AlgebraSpec("B", (M - 1) // 2, N // 2)
            if M == 2:
                return AlgebraSpec("C", 0, N // 2 + 1)
            if M == 0:
                raise InvalidAlgebraError("osp(0|N) is not a basic classical superalgebra")
            return AlgebraSpec("D", M // 2, N // 2)
        if head == "D" and ";" in args:
            mt2 = re.fullmatch(rf"\s*2\s*,\s*1\s*;\s*(?P<a>{_RAT})\s*", args)
            if not mt2:
                raise ParseError(f"expected D(2,1;alpha) in {text!r} at position {args_pos}", args_pos)
            return AlgebraSpec("D21", alpha=Fraction(mt2.group("a")))
        if head in ("A", "B", "D"):
            m, n = ints(r",", 2)
            return AlgebraSpec(head, m, n)
        if head == "C":
            (n,) = ints(r",", 1)
            return AlgebraSpec("C", 0, n)
        if head == "F":
            if ints(r",", 1) != [4]:
                raise InvalidAlgebraError("only F(4) exists")
            return AlgebraSpec("F4")
        if ints(r",", 1) != [3]:
            raise InvalidAlgebraError("only G(3) exists")
        return AlgebraSpec("G3")
    except ZeroDivisionError:
        raise ParseError(f"bad rational in {text!r}", args_pos) from None


def _first_bad_position(text: str) -> int:
    """Length of the longest prefix that could still start a valid name."""
    heads = ("sl", "osp", "A", "B", "C", "D", "F", "G")
    s = text.lstrip()
    off = len(text) - len(s)
    for h in heads:
        if s.startswith(h):
            rest = s[len(h):]
            stripped = rest.lstrip()
            pos = off + len(h) + len(rest) - len(stripped)
            if not stripped.startswith("("):
                return pos
            close = stripped.find(")")
            if close < 0:
                return len(text)
            return pos + close + 1
    return off
