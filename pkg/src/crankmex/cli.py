"""Command-line interface: ``crankmex {stats,table,map,verify,series}``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bijections as bj
from . import identities as ids
from .partitions import (
    ClassTag,
    PartitionError,
    beta,
    crank,
    durfee,
    fixed_point,
    format_partition,
    member,
    mex,
    mu,
    omega,
    parse_partition,
)
from .tables import RENDERERS, TABLE_IDS, build_table
from .verify import SUITES, default_nmax, run_suites

FORMATS = ("text", "csv", "json")

MAPS = {
    "even-mex-to-fp": "X_e(n,k) -> F*(n,k+1) (Konan reduction, then G1 insertion)",
    "fp-to-even-mex": "F*(n,k+1) -> X_e(n,k), inverse of even-mex-to-fp",
    "konan-reduce": "X_e(n,k) -> G1(n-1,k)",
    "g1-insert": "G1(n-1,k) -> F*(n,k+1)",
    "fp-to-neg": "F*(n,k+1) -> M_<0(n,k)",
    "neg-to-fp": "M_<0(n,k) -> F*(n,k+1)",
    "neg-to-pos": "M_<0(n,k) -> M_>0(n,k+1)",
    "pos-to-neg": "M_>0(n,k+1) -> M_<0(n,k)",
    "chain": "X_e -> F* -> M_<0 -> M_>0",
}

SERIES = {
    "e": ids.e_series,
    "even-mex": ids.gf_even_mex_direct,
    "fixed-point": ids.gf_fixed_point_direct,
    "neg-crank": ids.gf_neg_crank_direct,
    "pos-crank": ids.gf_pos_crank_direct,
}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_stats(args) -> int:
    lam = parse_partition(args.parts)
    fp = fixed_point(lam)
    record = {
        "n": lam.n,
        "parts": list(lam),
        "notation": format_partition(lam),
        "omega": omega(lam),
        "mu": mu(lam),
        "crank": crank(lam),
        "mex": mex(lam),
        "beta": beta(lam),
        "durfee": durfee(lam, 0),
        "fixed_point": fp,
        "classes": [t.value for t in ClassTag if t is not ClassTag.P and member(lam, t)],
    }
    if args.format == "json":
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        keys = list(record)
        vals = [" ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else str(v)) for v in record.values()]
        text = ",".join(keys) + "\n" + ",".join(vals) + "\n"
    else:
        lines = []
        for k, v in record.items():
            if isinstance(v, list):
                v = " ".join(map(str, v))
            elif v is None:
                v = "none"
            lines.append(f"{k:>12}: {v}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_table(args) -> int:
    table = build_table(args.table_id, args.n)
    _emit(RENDERERS[args.format](table), args.out)
    return 0


def _apply_map(name: str, lam):
    """Returns ``(image, trace or None)``; ``chain`` returns the four-column row."""
    if name == "even-mex-to-fp":
        return bj.even_mex_to_fixed_point(lam)
    if name == "fp-to-even-mex":
        return bj.fixed_point_to_fixed_point_inverse(lam), None
    if name == "konan-reduce":
        return bj.konan_reduce(lam)
    if name == "g1-insert":
        return bj.g1_insert(lam), None
    if name == "fp-to-neg":
        img = bj.fixed_to_negcrank(lam)
        trace = bj.BijectionTrace()
        trace.add("fp-to-ones", img)
        return img, trace
    if name == "neg-to-fp":
        img = bj.negcrank_to_fixed(lam)
        trace = bj.BijectionTrace()
        trace.add("ones-to-part", img)
        return img, trace
    if name == "neg-to-pos":
        img = bj.neg_to_pos_crank(lam)
        trace = bj.BijectionTrace()
        trace.add("crank-neg-to-pos", img)
        return img, trace
    if name == "pos-to-neg":
        img = bj.pos_to_neg_crank(lam)
        trace = bj.BijectionTrace()
        trace.add("crank-pos-to-neg", img)
        return img, trace
    if name == "chain":
        row, trace = bj.trace_chain(lam)
        return row, trace
    raise ValueError(f"unknown map {name!r}")


def cmd_map(args) -> int:
    lam = parse_partition(args.parts)
    image, trace = _apply_map(args.map_name, lam)
    if args.map_name == "chain":
        rendered = " | ".join(format_partition(p) for p in image)
        parts = [list(p) for p in image]
    else:
        rendered = format_partition(image)
        parts = list(image)
    if args.format == "json":
        d = {"map": args.map_name, "input": list(lam), "image": parts}
        if args.trace and trace is not None:
            d["trace"] = trace.to_list()
        text = json.dumps(d, indent=2) + "\n"
    else:
        text = rendered + "\n"
        if args.trace and trace is not None:
            text += trace.render() + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    nmax = args.nmax if args.nmax is not None else default_nmax()
    for name, v in (("--nmax", nmax), ("--qmax", args.qmax), ("--zmax", args.zmax)):
        if v < 1:
            raise ValueError(f"{name} must be positive")
    reports = run_suites(args.suite, nmax, args.qmax, args.zmax)
    if args.format == "json":
        text = json.dumps([r.to_dict(args.timing) for r in reports], indent=2) + "\n"
    elif args.format == "csv":
        text = "suite,status,checks,counterexamples\n" + "".join(
            f"{r.suite},{'pass' if r.passed else 'fail'},{r.checks},{len(r.counterexamples)}\n" for r in reports
        )
    else:
        text = "\n".join(r.render(args.timing) for r in reports) + "\n"
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_series(args) -> int:
    if args.name == "crank":
        d = ids.gf_crank_trivariate(args.qmax).to_dict()
    else:
        d = SERIES[args.name](args.qmax, args.zmax).to_dict()
    _emit(json.dumps(d) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crankmex",
        description="Partition statistics, the even-mex / fixed-point / crank bijections, and exact q-series checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("stats", help="statistics of one partition")
    p.add_argument("parts", nargs="+", help="parts, e.g. '5 1 1' or '2^2 1^4'")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("table", help="reproduce a bijection table")
    p.add_argument("table_id", choices=TABLE_IDS)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("map", help="apply one bijection", epilog="\n".join(f"{k}: {v}" for k, v in MAPS.items()),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("map_name", choices=list(MAPS))
    p.add_argument("parts", nargs="+")
    p.add_argument("--trace", action="store_true", help="print every intermediate state")
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--nmax", type=int, default=None, help="enumeration bound (default 28 or $CRANKMEX_BUDGET)")
    p.add_argument("--qmax", type=int, default=ids.DEFAULT_QMAX)
    p.add_argument("--zmax", type=int, default=ids.DEFAULT_ZMAX)
    p.add_argument("--timing", action="store_true", help="include elapsed times (output no longer byte-stable)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="dump a truncated generating function as JSON")
    p.add_argument("name", choices=list(SERIES) + ["crank"])
    p.add_argument("--qmax", type=int, default=ids.DEFAULT_QMAX)
    p.add_argument("--zmax", type=int, default=ids.DEFAULT_ZMAX)
    p.add_argument("--out")
    p.set_defaults(func=cmd_series)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PartitionError, bj.DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
