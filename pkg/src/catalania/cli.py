"""``catalania`` command line.

Exit codes: 0 success, 1 check failure, 2 parse/validation error,
3 non-tame w under --strict-tame, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import __version__
from .catalan import NotTame, NotTameError, catalan_H, kostka_psi, resolve_w
from .character import qpoly_str
from .checks import SUITES, default_jobs, run_suite
from .lattice import Partition, partitions_up_to
from .root_ideal import RootIdeal, check_dim_identities, enumerate_ideals, invariants

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_TAME, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def _psi(args) -> RootIdeal:
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    try:
        return RootIdeal.parse(args.n, args.psi)
    except ValueError as exc:
        raise UsageError(f"invalid root ideal {args.psi!r}: {exc}") from exc


def _lambda(args, n: int) -> Partition:
    try:
        lam = Partition.parse(args.lam)
    except ValueError as exc:
        raise UsageError(f"invalid partition {args.lam!r}: {exc}") from exc
    if len(lam) > n:
        raise UsageError(f"partition {args.lam!r} has more than n={n} parts")
    return lam


def cmd_ideal_info(args) -> int:
    psi = _psi(args)
    record = {"n": psi.n, "psi": psi.to_str(), "rows": list(psi.rows)}
    record.update(invariants(psi).to_json())
    record["identities"] = check_dim_identities(psi).to_json()
    print(_dump(record, args.pretty))
    return EXIT_OK


def cmd_catalan(args) -> int:
    psi = _psi(args)
    lam = _lambda(args, psi.n)
    try:
        w = resolve_w(args.w, psi)
    except ValueError as exc:
        raise UsageError(f"invalid w {args.w!r}: {exc}") from exc
    routes = ["M", "N"] if args.route == "both" else [args.route]
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotTame)
        for route in routes:
            results.append(catalan_H(psi, lam, w, route, strict_tame=args.strict_tame))
    if args.format == "text":
        for r in results:
            print(f"route {r.route}: level {r.level}, tame={r.tame}")
            print(f"  H = {r.H.to_str()}")
            if r.schur is not None:
                for mu, poly in r.schur.items():
                    print(f"  s_({mu.to_str()}): {qpoly_str(poly)}")
            for note in r.notes:
                print(f"  note: {note}")
        if len(results) == 2:
            print(f"equal: {results[0].character == results[1].character}")
        return EXIT_OK
    if len(results) == 1:
        out = results[0].to_json()
    else:
        out = {
            "M": results[0].to_json(),
            "N": results[1].to_json(),
            "equal": results[0].character == results[1].character,
        }
    print(_dump(out, args.pretty))
    return EXIT_OK


def cmd_kostka(args) -> int:
    psi = _psi(args)
    lam = _lambda(args, psi.n)
    exp = kostka_psi(psi, lam)
    print(_dump({"psi": psi.to_str(), "lambda": lam.to_str(), "kostka": exp.to_json()}, args.pretty))
    return EXIT_OK


def cmd_check(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    report = run_suite(args.suite, args.n, args.max_weight, args.seed, jobs)
    print(_dump(report.to_json(), args.pretty))
    return EXIT_OK if report.ok else EXIT_CHECK


def sweep_records(n: int, max_weight: int):
    for psi in enumerate_ideals(n):
        for lam in partitions_up_to(max_weight, n):
            yield {
                "psi": psi.to_str(),
                "lambda": lam.to_str(),
                "kostka": kostka_psi(psi, lam).to_json(),
            }


def cmd_sweep(args) -> int:
    lines = [json.dumps(rec, separators=(",", ":")) for rec in sweep_records(args.n, args.max_weight)]
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(_dump({"out": args.out, "records": len(lines)}, args.pretty))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ideals = [psi.to_str() for psi in enumerate_ideals(args.n)]
    print(_dump({"n": args.n, "count": len(ideals), "ideals": ideals}, args.pretty))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalania",
        description="Catalan functions and Kostka polynomials of root ideals via Demazure operators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, psi=True, lam=False):
        p.add_argument("--n", type=int, required=True, help="rank of GL(n)")
        if psi:
            p.add_argument("--psi", default="", help='row lengths, e.g. "4,4,1" (empty = no roots)')
        if lam:
            p.add_argument("--lambda", dest="lam", default="", help='partition, e.g. "2,1"')
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    p = sub.add_parser("ideal-info", help="invariants of a root ideal")
    common(p)
    p.set_defaults(func=cmd_ideal_info)

    p = sub.add_parser("catalan", help="compute H(psi; lambda; w)")
    common(p, lam=True)
    p.add_argument("--w", default="w0", help='"w0", "w0psi", one-line "3,1,2" or word "s1 s2"')
    p.add_argument("--route", choices=["M", "N", "both"], default="M")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--strict-tame", action="store_true", help="fail with exit 3 if w is not tame")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("kostka", help="Schur expansion of H(psi; lambda; w0)")
    common(p, lam=True)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    common(p, psi=False)
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env CATALANIA_JOBS)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("sweep", help="write K^psi tables as JSON lines")
    common(p, psi=False)
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate", help="list all root ideals of rank n")
    common(p, psi=False)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotTameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TAME


if __name__ == "__main__":
    sys.exit(main())
