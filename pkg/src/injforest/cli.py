"""Command-line front end.

    injforest count forests --lambda 3,1,1 --roots 1,1
    injforest table xi --n 8 --p 2
    injforest sequence catalan --stop 6
    injforest verify all --ci
    injforest enumerate tri --n 6

Lists (lambda, roots, rho, mu, nu, type) are comma-separated integers and
colors are 1-based.  Every count is printed as an exact decimal integer.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import counting, keypoly, sequences, tables, verify
from .combinatorics import fuss_catalan
from .enumeration import (
    DEFAULT_MAX_SIZE,
    ColoredForest,
    enumerate_forests,
    enumerate_trees,
    serialize_forest,
)
from .errors import DomainError, GuardError
from .triangulation import census, chi, enumerate_triangulations, proper_three_coloring, type_of


def int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- count ------------------------------------------------------------------------

def cmd_count(args) -> int:
    what = args.what
    if what == "forests":
        value = counting.count_forests(args.lam, args.roots)
    elif what == "trees":
        value = counting.count_trees(args.lam, args.root)
    elif what == "total":
        value = counting.count_forests_total(args.n, args.k, args.m)
    elif what == "tri":
        value = counting.count_triangulations_by_type(args.n, args.type)
    elif what == "fuss":
        value = fuss_catalan(args.n, args.p, args.r)
    elif what == "xi":
        value = counting.xi(args.n, len(args.nu), args.nu)
    elif what == "alpha":
        value = counting.alpha(args.n, len(args.rho) - 1, args.rho, args.mu)
    else:  # pragma: no cover - argparse restricts the choices
        raise DomainError(f"unknown count {what!r}")
    print(value)
    return 0


# -- table ------------------------------------------------------------------------

def cmd_table(args) -> int:
    if args.formula == "xi":
        tab = tables.table("xi", n=args.n, p=args.p)
    elif args.formula == "alpha":
        tab = tables.table("alpha", n=args.n, rho=args.rho)
    elif args.formula == "tri":
        tab = tables.table("tri", n=args.n) if args.method == "formula" else census(args.n, "brute")
    else:
        tab = tables.table("forest", n=args.n, roots=args.roots, k=args.k)
    _emit(tab.to_json() if args.format == "json" else tab.to_csv(), args.output)
    return 0


# -- sequence -----------------------------------------------------------------------

def cmd_sequence(args) -> int:
    if args.seq == "catalan":
        pairs = sequences.catalan(args.start, args.stop)
    elif args.seq == "fuss":
        pairs = sequences.fuss(args.p, args.r, args.start, args.stop)
    elif args.seq == "row-sum":
        pairs = sequences.row_sum(args.h, args.start, args.stop)
    else:
        pairs = sequences.antidiagonal(args.n)
    _emit(sequences.bfile(list(pairs)), args.output)
    return 0


# -- verify -----------------------------------------------------------------------

def cmd_verify(args) -> int:
    accepted = {
        "oracle": ("k", "max_n", "max_m"),
        "poly": ("k", "part", "seed"),
        "chi": ("max_n",),
        "census": ("max_n",),
        "recurrence": ("k", "max_n"),
        "fuss": (),
        "all": (),
    }[args.suite]
    options = {"ci": args.ci}
    for name in accepted:
        if getattr(args, name) is not None:
            options[name] = getattr(args, name)
    results = verify.run_suite(args.suite, **options)
    ok = all(r.passed for r in results)
    if args.json_report:
        report = {"suite": args.suite, "passed": ok, "checks": [r.as_dict() for r in results]}
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    else:
        lines = []
        for r in results:
            lines.append(r.line())
            lines.extend(f"    {msg}" for msg in r.failures)
        lines.append(f"{'PASS' if ok else 'FAIL'}  {sum(r.instances for r in results)} instances checked")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


# -- enumerate ---------------------------------------------------------------------

def _tri_record(t, fmt: str) -> str:
    if fmt == "json":
        doc = json.loads(t.to_json())
        doc["colors"] = list(proper_three_coloring(t).colors)
        doc["type"] = list(type_of(t))
        doc["tree"] = str(chi(t))
        return json.dumps(doc, separators=(",", ":"))
    return f"{t}  type={tuple(type_of(t))}  tree={chi(t)}"


def cmd_enumerate(args) -> int:
    fmt = args.format
    out = []
    if args.what == "forests":
        k = len(args.lam)
        stream = (serialize_forest(f, fmt) for f in enumerate_forests(args.lam, args.roots, args.max_size))
    elif args.what == "trees":
        k = len(args.lam)
        stream = (serialize_forest(ColoredForest(k, (t,)), fmt)
                  for t in enumerate_trees(args.lam, args.root, args.max_size))
    else:
        if fmt == "dot":
            raise DomainError("triangulations are exported as text or json")
        if args.n > args.max_size:
            raise GuardError(f"n = {args.n} exceeds the size guard {args.max_size}")
        stream = (_tri_record(t, fmt) for t in enumerate_triangulations(args.n))
    # materialize first so a failure never leaves partial output behind
    for record in stream:
        out.append(record if record.endswith("\n") else record + "\n")
    _emit("".join(out), args.output)
    return 0


def cmd_inspect_z(args) -> int:
    report = keypoly.z_coefficient_report(args.k)
    for key, value in report.items():
        print(f"{key}: {value}")
    if args.show:
        print(keypoly.z_substitution(args.k).render(keypoly.z_names(args.k)))
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="injforest", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    # count
    p = sub.add_parser("count", help="print one exact count")
    csub = p.add_subparsers(dest="what", required=True)
    q = csub.add_parser("forests")
    q.add_argument("--lambda", dest="lam", type=int_list, required=True)
    q.add_argument("--roots", type=int_list, default=())
    q = csub.add_parser("trees")
    q.add_argument("--lambda", dest="lam", type=int_list, required=True)
    q.add_argument("--root", type=int, required=True)
    q = csub.add_parser("total")
    for name in ("n", "k", "m"):
        q.add_argument(f"--{name}", type=int, required=True)
    q = csub.add_parser("tri")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--type", type=int_list, required=True)
    q = csub.add_parser("fuss")
    for name in ("n", "p", "r"):
        q.add_argument(f"--{name}", type=int, required=True)
    q = csub.add_parser("xi")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--nu", type=int_list, required=True)
    q = csub.add_parser("alpha")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--rho", type=int_list, required=True)
    q.add_argument("--mu", type=int_list, required=True)
    p.set_defaults(func=cmd_count)

    # table
    p = sub.add_parser("table", help="emit a full count table as CSV or JSON")
    p.add_argument("formula", choices=["xi", "alpha", "tri", "forest"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--rho", type=int_list)
    p.add_argument("--k", type=int)
    p.add_argument("--roots", type=int_list)
    p.add_argument("--method", choices=["formula", "brute"], default="formula")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output")
    p.set_defaults(func=cmd_table)

    # sequence
    p = sub.add_parser("sequence", help="emit a sequence in b-file layout")
    p.add_argument("seq", choices=["catalan", "fuss", "row-sum", "antidiagonal"])
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--stop", type=int, default=20)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--h", type=int, default=0)
    p.add_argument("--n", type=int, default=7)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sequence)

    # verify
    p = sub.add_parser("verify", help="run cross-check sweeps")
    p.add_argument("suite", choices=[*verify.SUITES, "all"])
    p.add_argument("--k", type=int)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-m", type=int)
    p.add_argument("--part", choices=list(keypoly.IDENTITY_PARTS))
    p.add_argument("--seed", type=int)
    p.add_argument("--ci", action="store_true", help="reduced sizes for continuous integration")
    p.add_argument("--json-report", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    # enumerate
    p = sub.add_parser("enumerate", help="list canonical objects, one per line")
    esub = p.add_subparsers(dest="what", required=True)
    for name in ("forests", "trees", "tri"):
        q = esub.add_parser(name)
        if name == "tri":
            q.add_argument("--n", type=int, required=True)
            q.add_argument("--format", choices=["text", "json"], default="text")
        else:
            q.add_argument("--lambda", dest="lam", type=int_list, required=True)
            if name == "forests":
                q.add_argument("--roots", type=int_list, default=())
            else:
                q.add_argument("--root", type=int, required=True)
            q.add_argument("--format", choices=["text", "json", "dot"], default="text")
        q.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
        q.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("inspect-z", help="report P_k coefficients after z_i = x_i - y_i")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--show", action="store_true")
    p.set_defaults(func=cmd_inspect_z)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if args.formula == "alpha" and args.rho is None:
            parser.error("table alpha needs --rho")
        if args.formula == "forest" and (args.k is None or args.roots is None):
            parser.error("table forest needs --k and --roots")
    try:
        return args.func(args)
    except (DomainError, GuardError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
