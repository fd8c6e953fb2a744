"""Command-line front end.

Exit codes: 0 ran (verdict in the payload), 2 input error, 3 resource guard,
4 internal consistency failure.  Payloads go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import ConsistencyError, InputError, PolyObstructError, ResourceLimitError
from .kneser import DEFAULT_COLORING_BUDGET, sarkaria_details
from .polytopes import ProductType, coskeleton, cotype_complex
from .reports import Query, run_query, sweep
from .simplicial import f_vector, minimal_non_faces, to_members
from .spec_language import parse_spec, render


def _dump(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None


def cmd_obstruct(args) -> int:
    report = run_query(Query(args.spec, args.target, args.e, args.mode), args.budget)
    print(report.to_table() if args.format == "table" else report.to_json())
    if not report.consistent:
        print("error: computation paths disagree", file=sys.stderr)
        return ConsistencyError.exit_code
    if report.errors and not report.bounds:
        for mode, msg in sorted(report.errors.items()):
            print(f"error: {mode}: {msg}", file=sys.stderr)
        if any(msg.startswith("resource limit") for msg in report.errors.values()):
            return ResourceLimitError.exit_code
        return InputError.exit_code
    for mode, msg in sorted(report.errors.items()):
        print(f"warning: {mode}: {msg}", file=sys.stderr)
    if any(msg.startswith("resource limit") for msg in report.errors.values()):
        return ResourceLimitError.exit_code
    return 0


def cmd_coskeleton(args) -> int:
    P = parse_spec(args.spec)
    K = coskeleton(P, args.k)
    payload = {"polytope": render(P), "k": args.k, "ground_size": K.size}
    if args.out == "facets":
        payload["facets"] = [list(f) for f in K.facet_sets]
    elif args.out == "fvector":
        fv = f_vector(K)
        payload["f_vector"] = list(fv)
        payload["euler_characteristic"] = sum((-1) ** i * x for i, x in enumerate(fv))
    else:
        payload["minimal_non_faces"] = [list(to_members(f)) for f in minimal_non_faces(K)]
    print(_dump(payload))
    return 0


def cmd_sarkaria(args) -> int:
    P = parse_spec(args.spec)
    if args.cotype is not None:
        if not isinstance(P, ProductType):
            P = ProductType((P,))
        try:
            lam = [int(x) for x in args.cotype.split(",")]
        except ValueError:
            raise InputError(f"cotype must be comma-separated integers, got {args.cotype!r}") from None
        K = cotype_complex(P, lam)
        where = {"cotype": lam}
    elif args.k is not None:
        K = coskeleton(P, args.k)
        where = {"k": args.k}
    else:
        raise InputError("give either --k or --cotype")
    sind, nf, chi = sarkaria_details(K, args.budget)
    print(_dump({"polytope": render(P), **where, "ground_size": K.size,
                 "minimal_non_faces": len(nf), "chromatic_number": chi, "sarkaria_index": sind}))
    return 0


def cmd_verify(args) -> int:
    from .verify import verify_suite

    summary = verify_suite(args.scope, stream=sys.stdout)
    return 0 if summary.ok else 1


def cmd_sweep(args) -> int:
    rows = sweep(args.spec, args.target, args.e_range, args.k_range, args.mode, args.budget)
    if args.format == "table":
        print(f"{'k':>4}{'e':>5}  verdict")
        for row in rows:
            verdict = ("n/a" if not row["available"]
                       else "OBSTRUCTED" if row["obstructed"] else "-")
            print(f"{row['k'] if row['k'] is not None else '-':>4}{row['e']:>5}  {verdict}")
    else:
        print(_dump(rows))
    return 0 if all(r["consistent"] for r in rows) else ConsistencyError.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyobstruct",
        description="Obstructions to skeleton-preserving projections of polytopes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_COLORING_BUDGET,
                       help="largest graph block handed to exact coloring (default %(default)s)")

    p = sub.add_parser("obstruct", help="decide a projection query")
    p.add_argument("spec")
    p.add_argument("--target", required=True,
                   help="skeleton:K | surface | special:K | neighborly")
    p.add_argument("--e", type=int, required=True, help="target dimension")
    p.add_argument("--mode", default="all", choices=["all", "closed_form", "ilp", "brute_force"])
    p.add_argument("--format", default="json", choices=["json", "table"])
    budget(p)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("coskeleton", help="print a coskeleton complex")
    p.add_argument("spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default="facets", choices=["facets", "fvector", "nonfaces"])
    p.set_defaults(func=cmd_coskeleton)

    p = sub.add_parser("sarkaria", help="Sarkaria index of a coskeleton or cotype complex")
    p.add_argument("spec")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--cotype", help="comma-separated face type, e.g. 1,0")
    budget(p)
    p.set_defaults(func=cmd_sarkaria)

    p = sub.add_parser("verify", help="replay the built-in consistency checks")
    p.add_argument("--scope", default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verdict grid over e and k")
    p.add_argument("spec")
    p.add_argument("--target", required=True, help="skeleton | special | surface | neighborly")
    p.add_argument("--e-range", type=_int_range, required=True, help="A..B inclusive")
    p.add_argument("--k-range", type=_int_range, default=None, help="C..D inclusive")
    p.add_argument("--mode", default="closed_form",
                   choices=["all", "closed_form", "ilp", "brute_force"])
    p.add_argument("--format", default="json", choices=["json", "table"])
    budget(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep" and args.target in ("skeleton", "special") and args.k_range is None:
        print(f"error: --k-range is required for target {args.target}", file=sys.stderr)
        return InputError.exit_code
    try:
        return args.func(args)
    except PolyObstructError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
