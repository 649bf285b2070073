"""Command-line surface: tables, state construction, projection, the
equivalence map and the verification harness.

Exit codes: 0 success, 2 argument/validation error, 1 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .basis import (
    BasisKey,
    basis_state,
    state_to_dict,
    traceless_project,
)
from .catalog import (
    SUBGROUPS,
    InvalidWeightError,
    IrrepLabel,
    cg_series,
    dim,
    induced_multiplicity,
    iy_spectrum,
    k_of,
    weight_from_iy,
)
from .induced import equivalence_map
from .poly import Polynomial, poly_from_records, poly_to_records


class CliError(Exception):
    """Validation failure; maps to exit code 2."""


def _parse_scaled(text: str, scale: int, what: str) -> int:
    """Parse a half- or third-integer ("1/2", "0.5", "-1") into 2x or 3x form."""
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse {what}={text!r}: {exc}") from None
    scaled = value * scale
    if scaled.denominator != 1:
        raise CliError(f"{what}={text!r} is not an integer multiple of 1/{scale}")
    return int(scaled)


def _fmt_fraction(num: int, den: int) -> str:
    f = Fraction(num, den)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _emit_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- subcommand handlers --------------------------------------------------------


def cmd_dim(args) -> int:
    print(dim(IrrepLabel(args.p, args.q)))
    return 0


def cmd_spectrum(args) -> int:
    rep = IrrepLabel(args.p, args.q)
    entries = sorted(iy_spectrum(rep), key=lambda e: (e.r, e.s))
    rows = [
        (rep.p, rep.q, e.r, e.s, e.I2, e.Y3,
         _fmt_fraction(e.I2, 2), _fmt_fraction(e.Y3, 3), e.size)
        for e in entries
    ]
    header = ("p", "q", "r", "s", "I2", "Y3", "I", "Y", "size")
    if args.format == "json":
        print(_dump_json([dict(zip(header, r)) for r in rows]))
    elif args.format == "csv":
        sys.stdout.write(_emit_csv(header, rows))
    else:
        for r in rows:
            print(f"(r={r[2]}, s={r[3]}): I={r[6]}, Y={r[7]}, size {r[8]}")
    return 0


def cmd_cg(args) -> int:
    series = cg_series(args.p, args.q)
    rows = [(args.p, args.q, rho, rep.p, rep.q, dim(rep))
            for rho, rep in enumerate(series)]
    header = ("p", "q", "rho", "p_out", "q_out", "dim")
    if args.format == "json":
        print(_dump_json([dict(zip(header, r)) for r in rows]))
    elif args.format == "csv":
        sys.stdout.write(_emit_csv(header, rows))
    else:
        terms = " + ".join(f"({r[3]},{r[4]})" for r in rows)
        print(f"({args.p},0) x (0,{args.q}) = {terms}")
    return 0


def cmd_mult(args) -> int:
    print(induced_multiplicity(args.subgroup, IrrepLabel(args.p, args.q)))
    return 0


def cmd_state(args) -> int:
    rep = IrrepLabel(args.p, args.q)
    I2 = _parse_scaled(args.I, 2, "I")
    M2 = _parse_scaled(args.M, 2, "M")
    Y3 = _parse_scaled(args.Y, 3, "Y")
    m2 = _parse_scaled(args.m, 2, "m")
    try:
        weight = weight_from_iy(rep, I2, Y3, M2=M2)
        key = BasisKey(rep=rep, weight=weight, m2=m2)
    except (InvalidWeightError, ValueError) as exc:
        raise CliError(str(exc)) from None
    st = basis_state(key)
    if args.json:
        print(_dump_json(state_to_dict(st)))
    elif args.latex:
        print(_state_latex(st))
    else:
        print(f"|{args.p},{args.q}; I={args.I} M={args.M} Y={args.Y}; m={args.m}>")
        for m in sorted(st.poly.terms):
            c = st.poly.terms[m]
            print(f"  {c.rat}  exps={list(m)}")
        print(f"norm_sq = {st.norm_sq}")
    return 0


_VARS = ("z_1", "z_2", "z_3", "w_1", "w_2", "w_3")


def _state_latex(st) -> str:
    bits = []
    for m in sorted(st.poly.terms):
        c = st.poly.terms[m].rat
        coef = str(c.numerator) if c.denominator == 1 else \
            f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
        mono = "".join(
            (f"{v}" if e == 1 else f"{v}^{{{e}}}") for v, e in zip(_VARS, m) if e
        )
        bits.append(f"{coef} {mono}".strip())
    ns = st.norm_sq
    return (
        "\\frac{1}{\\sqrt{" + f"{ns.numerator}/{ns.denominator}" + "}}\\left("
        + " + ".join(bits).replace("+ -", "- ")
        + "\\right)"
    )


def _read_poly(args) -> Polynomial:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        return poly_from_records(json.loads(text))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise CliError(f"bad polynomial JSON: {exc}") from None


def cmd_project(args) -> int:
    f = _read_poly(args)
    out = Polynomial.zero()
    for part in f.bidegree_split().values():
        out = out + traceless_project(part)
    print(_dump_json(poly_to_records(out)))
    return 0


def cmd_map(args) -> int:
    f = _read_poly(args)
    try:
        sf = equivalence_map(f)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    channels = []
    for (p, q), part in sorted(sf.poly.bidegree_split().items()):
        scale = sf.scale_sq((p, q))
        channels.append(
            {
                "p": p,
                "q": q,
                "scale_sq_num": str(scale.numerator),
                "scale_sq_den": str(scale.denominator),
                "terms": poly_to_records(part),
            }
        )
    print(_dump_json({"channels": channels}))
    return 0


def cmd_table(args) -> int:
    pr, qr = range(args.max_p + 1), range(args.max_q + 1)
    if args.kind == "dims":
        header = ("p", "q", "dim", "k2")
        rows = [(p, q, dim(IrrepLabel(p, q)), k_of(IrrepLabel(p, q)))
                for p in pr for q in qr]
    elif args.kind == "spectra":
        header = ("p", "q", "r", "s", "I2", "Y3", "size")
        rows = [
            (p, q, e.r, e.s, e.I2, e.Y3, e.size)
            for p in pr for q in qr
            for e in sorted(iy_spectrum(IrrepLabel(p, q)), key=lambda e: (e.r, e.s))
        ]
    elif args.kind == "cg":
        header = ("p", "q", "rho", "p_out", "q_out", "dim")
        rows = [
            (p, q, rho, rep.p, rep.q, dim(rep))
            for p in pr for q in qr
            for rho, rep in enumerate(cg_series(p, q))
        ]
    elif args.kind == "mult":
        header = ("subgroup", "p", "q", "mult")
        rows = [
            (args.subgroup, p, q,
             induced_multiplicity(args.subgroup, IrrepLabel(p, q)))
            for p in pr for q in qr
        ]
    else:  # unreachable through argparse choices
        raise CliError(f"unknown table kind {args.kind!r}")
    if args.format == "json":
        print(_dump_json([dict(zip(header, r)) for r in rows]))
    else:
        sys.stdout.write(_emit_csv(header, rows))
    return 0


def cmd_verify(args) -> int:
    suites = verify_mod.run_all(
        max_pq=args.max_pq,
        degree=args.degree,
        samples=args.samples,
        seed=args.seed,
        numeric_checks=args.numeric,
        numeric_samples=args.numeric_samples,
    )
    all_passed = all(s["passed"] for s in suites)
    print(_dump_json({"pass": all_passed, "suites": suites}))
    return 0 if all_passed else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schwinger-su3",
        description="Exact SU(3) x Sp(2,R) oscillator basis toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="irrep dimension d(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("spectrum", help="I-Y multiplet spectrum of (p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("cg", help="Clebsch-Gordan series (p,0) x (0,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_cg)

    p = sub.add_parser("mult", help="induced-representation multiplicity of (p,q)")
    p.add_argument("subgroup", choices=SUBGROUPS)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("state", help="construct a normalized basis state")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--I", required=True, help="isospin, e.g. 1/2 or 0.5")
    p.add_argument("--M", required=True, help="magnetic quantum number")
    p.add_argument("--Y", required=True, help="hypercharge, a third-integer fraction")
    p.add_argument("--m", required=True, help="sp(2,R) weight, half-integer >= (p+q+3)/2")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--latex", action="store_true")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("project", help="remove traces from a polynomial (JSON in/out)")
    p.add_argument("--input", default="-", help="path to polynomial JSON, or - for stdin")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("map", help="equivalence map to a sphere function (JSON in/out)")
    p.add_argument("--input", default="-", help="path to polynomial JSON, or - for stdin")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("table", help="tabulate dims/spectra/cg/mult over a range")
    p.add_argument("kind", choices=("dims", "spectra", "cg", "mult"))
    p.add_argument("--max-p", type=int, default=3)
    p.add_argument("--max-q", type=int, default=3)
    p.add_argument("--subgroup", choices=SUBGROUPS, default="SU2")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification harness")
    p.add_argument("--max-pq", type=int, default=3)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--numeric-samples", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
