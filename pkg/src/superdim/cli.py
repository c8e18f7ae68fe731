"""``superdim`` command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .atypical import atypical_dim_sequence, classify_atypicality
from .errors import ConsistencyError, ParseError, SuperdimError
from .exactq import expand
from .hilbert import series_via_operator
from .report import (
    build_query,
    latex_table,
    rat_json,
    rat_str,
    render_json,
    render_text,
    series_text,
)
from .rootdata import Root, RootDatum, build_root_datum, parse_algebra
from .weights import Dominance, Weight, format_vector, parse_coords, parse_marks, weight_from_marks

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _datum(text: str) -> RootDatum:
    return build_root_datum(parse_algebra(text))


def _weight(datum: RootDatum, marks: Optional[str], coords: Optional[str]) -> Weight:
    if (marks is None) == (coords is None):
        raise UsageError("give exactly one of --marks or --coords")
    if marks is not None:
        return weight_from_marks(datum, parse_marks(marks))
    return parse_coords(datum, coords)


# ---------------------------------------------------------------------------
# info
# ---------------------------------------------------------------------------


def _roots(datum: RootDatum, roots: Sequence[Root]) -> list[str]:
    return [format_vector(datum.labels, r.coords) for r in roots]


def info_obj(datum: RootDatum) -> dict:
    return {
        "algebra": datum.spec.common_name,
        "family": datum.spec.name,
        "basis": list(datum.labels),
        "gram": [[rat_json(x) for x in row] for row in datum.form],
        "simple_roots": [
            {"root": format_vector(datum.labels, r.coords), "parity": r.parity} for r in datum.simple_roots
        ],
        "even_positive_roots": _roots(datum, datum.delta0_plus),
        "odd_positive_roots": _roots(datum, datum.delta1_plus),
        "odd_isotropic_positive_roots": _roots(datum, datum.delta1_bar_plus),
        "rho0": format_vector(datum.labels, datum.rho0),
        "rho1": format_vector(datum.labels, datum.rho1),
        "rho": format_vector(datum.labels, datum.rho),
        "d0": datum.d0,
        "d1": datum.d1,
    }


def cmd_info(args) -> str:
    obj = info_obj(_datum(args.algebra))
    if args.format == "json":
        return render_json(obj)
    lines = [f"algebra     {obj['algebra']} = {obj['family']}", f"basis       {', '.join(obj['basis'])}"]
    lines.append("simple      " + ", ".join(f"{s['root']} ({s['parity']})" for s in obj["simple_roots"]))
    lines.append("Δ0+         " + ", ".join(obj["even_positive_roots"]))
    lines.append("Δ1+         " + ", ".join(obj["odd_positive_roots"]))
    lines.append("Δ̄1+         " + ", ".join(obj["odd_isotropic_positive_roots"]))
    lines += [f"ρ0          {obj['rho0']}", f"ρ1          {obj['rho1']}", f"ρ           {obj['rho']}"]
    lines += [f"d0          {obj['d0']}", f"d1          {obj['d1']}"]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------


def cmd_series(args) -> str:
    datum = _datum(args.algebra)
    res = build_query(datum, _weight(datum, args.marks, args.coords), args.terms)
    if args.format == "json":
        return render_json(res.to_json_obj())
    if args.format == "latex":
        return latex_table([res])
    return render_text(res)


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

_ASSIGN_RE = re.compile(r"\s*a(\d+)\s*=\s*(.+?)\s*$")


def _parse_assign(text: str, allow_range: bool) -> tuple[int, list[Fraction]]:
    mt = _ASSIGN_RE.match(text)
    if not mt:
        raise ParseError(f"expected aN=... but got {text!r}", 0)
    idx, rhs = int(mt.group(1)), mt.group(2)
    if allow_range and ".." in rhs:
        lo, _, hi = rhs.partition("..")
        try:
            lo_i, hi_i = int(lo), int(hi)
        except ValueError:
            raise ParseError(f"range bounds must be integers in {text!r}", mt.start(2)) from None
        return idx, [Fraction(v) for v in range(lo_i, hi_i + 1)]
    return idx, list(parse_marks(rhs))


def scan_grid(datum: RootDatum, ranges: Sequence[str], fixed: Sequence[str]) -> list[tuple[Fraction, ...]]:
    """All mark vectors of the grid, in lexicographic order of (a1, a2, ...)."""
    choices: dict[int, list[Fraction]] = {}
    for text, is_range in [(r, True) for r in ranges] + [(f, False) for f in fixed]:
        idx, vals = _parse_assign(text, is_range)
        if not 1 <= idx <= datum.rank:
            raise UsageError(f"a{idx} out of range; {datum.spec.name} has marks a1..a{datum.rank}")
        if idx in choices:
            raise UsageError(f"a{idx} given twice")
        choices[idx] = vals
    missing = [f"a{i}" for i in range(1, datum.rank + 1) if i not in choices]
    if missing:
        raise UsageError(f"no range or value for {', '.join(missing)}")
    axes = [sorted(set(choices[i])) for i in range(1, datum.rank + 1)]
    return list(itertools.product(*axes))


def scan_rows(datum: RootDatum, ranges: Sequence[str], fixed: Sequence[str], n_terms: int):
    rows = []
    for marks in scan_grid(datum, ranges, fixed):
        res = build_query(datum, weight_from_marks(datum, marks), n_terms)
        if res.typicality.n_typical and res.dominance is not Dominance.FAIL:
            rows.append(res)
    return rows


def cmd_scan(args) -> str:
    datum = _datum(args.algebra)
    rows = scan_rows(datum, args.range or [], args.fix or [], args.terms)
    if args.format == "json":
        return render_json([r.to_json_obj() for r in rows])
    if args.format == "latex":
        return latex_table(rows)
    out = []
    for r in rows:
        marks = "(" + ",".join(rat_str(a) for a in r.marks) + ")"
        exp = ", ".join(rat_str(c) for c in r.expansion)
        out.append(f"{format_vector(r.labels, r.weight.coords):<24} {marks:<12} {series_text(r.series):<36} {exp}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# atypical
# ---------------------------------------------------------------------------


def atypical_obj(datum: RootDatum, w: Weight, n_terms: int) -> dict:
    cls = classify_atypicality(datum, w)
    if cls.kind == "typical":
        raise UsageError("weight is typical; use series")
    if cls.kind == "multiply_atypical":
        raise UsageError(f"weight is multiply atypical ({cls.count} atypical roots); only singly atypical is supported")
    dims = atypical_dim_sequence(datum, w, n_terms)
    bounds = expand(series_via_operator(datum, w), n_terms)
    for k in range(1, n_terms):
        if bounds[k] < dims[k]:
            raise ConsistencyError(f"typical formula value {bounds[k]} is below dim {dims[k]}", k)
    return {
        "algebra": datum.spec.common_name,
        "weight": format_vector(datum.labels, w.coords),
        "atypical_root": format_vector(datum.labels, cls.site.root.coords),
        "k": cls.site.k,
        "l": cls.site.l,
        "dims": dims,
        "bounds": [rat_json(b) for b in bounds],
    }


def cmd_atypical(args) -> str:
    datum = _datum(args.algebra)
    obj = atypical_obj(datum, _weight(datum, args.marks, args.coords), args.terms)
    if args.format == "json":
        return render_json(obj)
    return "\n".join(
        [
            f"algebra     {obj['algebra']}",
            f"weight      {obj['weight']}",
            f"atypical    {obj['atypical_root']} (k={obj['k']}, l={obj['l']})",
            f"dims        {', '.join(str(d) for d in obj['dims'])}",
            f"bounds      {', '.join(str(b) for b in obj['bounds'])}",
        ]
    )


# ---------------------------------------------------------------------------
# batch
# ---------------------------------------------------------------------------


def load_batch(path: str) -> list[dict]:
    with open(path, "rb") as fh:
        raw = fh.read()
    if path.endswith(".toml"):
        try:
            data = tomllib.loads(raw.decode())
        except tomllib.TOMLDecodeError as exc:
            raise ParseError(f"bad TOML in {path}: {exc}") from None
        queries = data.get("query", [])
    else:
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON in {path}: {exc}", exc.pos) from None
        queries = data if isinstance(data, list) else data.get("query", [])
    if not isinstance(queries, list) or not all(isinstance(q, dict) for q in queries):
        raise UsageError("batch file must hold a list of query tables")
    return queries


def run_query(q: dict) -> dict:
    kind = q.get("command", "series")
    datum = _datum(str(q["algebra"]))
    terms = int(q.get("terms", 5))
    marks = q.get("marks")
    if isinstance(marks, list):
        marks = ",".join(str(a) for a in marks)
    if kind == "info":
        return info_obj(datum)
    w = _weight(datum, marks, q.get("coords"))
    if kind == "series":
        return build_query(datum, w, terms).to_json_obj()
    if kind == "atypical":
        return atypical_obj(datum, w, terms)
    raise UsageError(f"unknown batch command {kind!r}")


def cmd_batch(args) -> str:
    try:
        results = [run_query(q) for q in load_batch(args.file)]
    except KeyError as exc:
        raise UsageError(f"batch query is missing {exc}") from None
    return render_json(results)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superdim", description="Typicality and Hilbert series of basic classical Lie superalgebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def weight_opts(sp):
        sp.add_argument("--marks", help="numerical marks, e.g. 0,1,1,1")
        sp.add_argument("--coords", help="coordinates, e.g. 2e1+2e2+e3-d2")

    sp = sub.add_parser("info", help="root datum listing")
    sp.add_argument("algebra")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("series", help="Hilbert series of one weight")
    sp.add_argument("algebra")
    weight_opts(sp)
    sp.add_argument("--terms", type=int, default=5)
    sp.add_argument("--format", choices=["text", "json", "latex"], default="text")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("scan", help="N-typical weights over a grid of marks")
    sp.add_argument("algebra")
    sp.add_argument("--range", action="append", metavar="aN=LO..HI")
    sp.add_argument("--fix", action="append", metavar="aN=V")
    sp.add_argument("--terms", type=int, default=4)
    sp.add_argument("--format", choices=["text", "json", "latex"], default="text")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("atypical", help="singly atypical dimensions for sl(m|n)")
    sp.add_argument("algebra")
    weight_opts(sp)
    sp.add_argument("--terms", type=int, default=6)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_atypical)

    sp = sub.add_parser("batch", help="run queries from a JSON or TOML file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_batch)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "terms", 1) < 1:
        print("superdim: error: --terms must be at least 1", file=sys.stderr)
        return 1
    try:
        out = args.func(args)
    except ConsistencyError as exc:
        print(f"superdim: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (SuperdimError, UsageError, ValueError, OSError) as exc:
        print(f"superdim: error: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
