"""Command-line interface: ``awspec {table,spectrum,first,curves,check,convert}``.

Exit codes: 0 success, 1 invariant failure, 2 usage or input-domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import __version__
from .aloff_wallach import eigen_pair, first_triples, iter_spherical
from .checks import SUITES, run_suite
from .estimates import (
    NormalParams,
    ParallelPointError,
    constant_volume_params,
    convert_r_to_t,
    convert_sasaki,
    convert_t_to_r,
    convert_t_to_sasaki,
    curvature_regime,
    exact_root,
    f1,
    f2,
    volume_factor,
)
from .oracle import oracle_max
from .spectrum import MetricParams, build_spectrum, first_entry

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Arguments parse but describe an invalid point (reported, exit 2)."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def parse_positive(text: str) -> Fraction:
    q = parse_rational(text)
    if q <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return q


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"range must look like LO:HI, got {text!r}")
    lo, hi = (parse_positive(p) for p in parts)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


# -- rendering ---------------------------------------------------------------


def _decimal(q: Fraction, places: int) -> str:
    with localcontext() as ctx:
        ctx.prec = max(28, places + 30)
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return str(d.quantize(Decimal(1).scaleb(-places)))


def _cell(value, decimals: int | None) -> str:
    if isinstance(value, Fraction):
        return str(value) if decimals is None else _decimal(value, decimals)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value) if decimals is None else f"{value:.{decimals}f}"
    return str(value)


def _json_value(value):
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def render(command: str, columns: list[str], rows: list[dict], fmt: str, decimals=None) -> str:
    if fmt == "json":
        doc = {
            "schema": f"awspec.{command}/{SCHEMA_VERSION}",
            "columns": columns,
            "rows": [{c: _json_value(r[c]) for c in columns} for r in rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    cells = [[_cell(r[c], decimals) if not isinstance(r[c], (list, tuple)) else _triples_str(r[c]) for c in columns] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _triples_str(triples) -> str:
    return " ".join("(" + ",".join(str(z) for z in t) + ")" for t in triples)


# -- subcommands -------------------------------------------------------------


def cmd_table(args):
    if args.first is not None:
        triples = first_triples(args.first)
    else:
        triples = list(iter_spherical(args.zmax))
    rows = []
    for t in triples:
        h, v = eigen_pair(t.z1, t.z2, t.z3)
        rows.append(dict(z1=t.z1, z2=t.z2, z3=t.z3, h=h, v=v, mult=t.total_mult))
    return ["z1", "z2", "z3", "h", "v", "mult"], rows


def cmd_spectrum(args):
    params = MetricParams(args.t0, args.t1)
    if args.first is not None:
        spec = build_spectrum(params, first_n=args.first)
    else:
        spec = build_spectrum(params, up_to=args.bound)
    rows = [
        dict(
            eigenvalue=e.eigenvalue,
            mult=e.multiplicity,
            triples=[(t.z1, t.z2, t.z3) for t in e.triples],
        )
        for e in spec
    ]
    return ["eigenvalue", "mult", "triples"], rows


def _params_from_first_args(args) -> MetricParams:
    given = {
        "t": (args.t0, args.t1),
        "sasaki": (args.alpha, args.delta),
        "r": (args.r0, args.r1),
    }
    complete = [k for k, (a, b) in given.items() if a is not None and b is not None]
    partial = [k for k, (a, b) in given.items() if (a is None) != (b is None)]
    if partial or len(complete) != 1:
        raise InputError(
            "usage", "give exactly one of --t0/--t1, --alpha/--delta or --r0/--r1 (both values)"
        )
    kind = complete[0]
    a, b = given[kind]
    try:
        if kind == "t":
            return MetricParams(a, b)
        if kind == "sasaki":
            return convert_sasaki(a, b)
        return convert_r_to_t(NormalParams(a, b))
    except ValueError as exc:
        raise InputError("domain", str(exc)) from None


def cmd_first(args):
    params = _params_from_first_args(args)
    entry = first_entry(params)
    row = dict(
        eigenvalue=entry.eigenvalue,
        mult=entry.multiplicity,
        triples=[(t.z1, t.z2, t.z3) for t in entry.triples],
        regime=curvature_regime(params).value,
        t0=params.t0,
        t1=params.t1,
    )
    return ["eigenvalue", "mult", "triples", "regime", "t0", "t1"], [row]


def _grid(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _fourth_root(q: Fraction) -> Fraction:
    exact = exact_root(q, 4)
    if exact is not None:
        return exact
    return Fraction(float(q) ** 0.25).limit_denominator(10**6)


def cmd_curves(args):
    lo, hi = args.t1_range
    if args.samples < 1:
        raise InputError("usage", "--samples must be positive")
    branches = list(iter_spherical(args.zmax))
    names = [f"b{t.z1}_{t.z2}_{t.z3}" for t in branches]
    pairs = [eigen_pair(t.z1, t.z2, t.z3) for t in branches]
    rows = []
    if args.mode == "estimates":
        for t1 in _grid(lo, hi, args.samples):
            params = MetricParams(args.t0, t1)
            bound = f2(t1, args.n)
            rows.append(
                dict(
                    t1=t1,
                    eta1=first_entry(params).eigenvalue,
                    f1=f1(t1, args.n),
                    f2=bound.value,
                    f2_valid=bound.valid,
                )
            )
        return ["t1", "eta1", "f1", "f2", "f2_valid"], rows
    if args.mode == "raw":
        for t1 in _grid(lo, hi, args.samples):
            row = dict(t0=args.t0, t1=t1)
            row.update({n: p.at(args.t0, t1) for n, p in zip(names, pairs)})
            rows.append(row)
        return ["t0", "t1"] + names, rows
    # constant volume: t1 = s^4, t0 = s^-3 with rational s
    for s in _grid(_fourth_root(lo), _fourth_root(hi), args.samples):
        params = constant_volume_params(s)
        row = dict(s=s, t0=params.t0, t1=params.t1, volume_factor=volume_factor(params))
        row["eta1"] = first_entry(params).eigenvalue
        row.update({n: p.at(params.t0, params.t1) for n, p in zip(names, pairs)})
        rows.append(row)
    return ["s", "t0", "t1", "volume_factor", "eta1"] + names, rows


def cmd_check(args):
    cap = oracle_max()
    if args.depth > cap:
        raise InputError("resource", f"--depth {args.depth} exceeds the oracle cap {cap}")
    results = run_suite(args.suite, args.depth)
    rows = [
        dict(suite=r.suite, status="pass" if r.passed else "fail", counterexample=r.counterexample)
        for r in results
    ]
    return ["suite", "status", "counterexample"], rows


_CONVERT_COLUMNS = {"t": ["t0", "t1"], "r": ["r0", "r1"], "sasaki": ["alpha", "delta"]}


def cmd_convert(args):
    a, b = args.values
    try:
        if args.source == "t":
            params = MetricParams(a, b)
        elif args.source == "r":
            params = convert_r_to_t(NormalParams(a, b))
        else:
            params = convert_sasaki(a, b)
        if args.target == "t":
            out = (params.t0, params.t1)
        elif args.target == "r":
            r = convert_t_to_r(params)
            out = (r.r0, r.r1)
        else:
            s = convert_t_to_sasaki(params)
            out = (s.alpha, s.delta)
    except ParallelPointError as exc:
        raise InputError("parallel_point", str(exc)) from None
    except ValueError as exc:
        raise InputError("domain", str(exc)) from None
    cols = _CONVERT_COLUMNS[args.target]
    return cols, [dict(zip(cols, out))]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="awspec", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("csv", "json", "pretty"), default="csv")
    fmt.add_argument(
        "--decimals", type=int, default=None, help="render rationals as decimals with D places"
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[fmt], help="spherical triples in lexicographic order")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--zmax", type=int)
    g.add_argument("--first", type=int)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("spectrum", parents=[fmt], help="merged spectrum at (t0, t1)")
    s.add_argument("--t0", type=parse_positive, required=True)
    s.add_argument("--t1", type=parse_positive, required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--bound", type=parse_rational)
    g.add_argument("--first", type=int)
    s.set_defaults(func=cmd_spectrum)

    f = sub.add_parser("first", parents=[fmt], help="first nonzero eigenvalue")
    for name in ("t0", "t1", "alpha", "delta", "r0", "r1"):
        f.add_argument(f"--{name}", type=parse_rational)
    f.set_defaults(func=cmd_first)

    c = sub.add_parser("curves", parents=[fmt], help="eigenvalue branches along t1")
    c.add_argument("--t0", type=parse_positive, default=Fraction(1, 2))
    c.add_argument("--t1-range", type=parse_range, required=True, dest="t1_range")
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--mode", choices=("raw", "constant_volume", "estimates"), default="raw")
    c.add_argument("--zmax", type=int, default=6, help="branches with z1 <= ZMAX")
    c.add_argument("--n", type=int, default=1, help="quaternionic dimension for estimates")
    c.set_defaults(func=cmd_curves)

    k = sub.add_parser("check", parents=[fmt], help="run invariant suites")
    k.add_argument("--suite", choices=SUITES + ("all",), default="all")
    k.add_argument("--depth", type=int, default=10)
    k.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", parents=[fmt], help="convert metric parameters")
    v.add_argument("--from", dest="source", choices=("t", "r", "sasaki"), required=True)
    v.add_argument("--to", dest="target", choices=("t", "r", "sasaki"), required=True)
    v.add_argument("values", nargs=2, type=parse_rational)
    v.set_defaults(func=cmd_convert)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        columns, rows = args.func(args)
    except InputError as exc:
        if args.format == "json":
            sys.stdout.write(json.dumps({"error": {"kind": exc.kind, "message": str(exc)}}) + "\n")
        sys.stderr.write(f"awspec: error: {exc.kind}: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(render(args.command, columns, rows, args.format, args.decimals))
    if args.command == "check" and any(r["status"] != "pass" for r in rows):
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
