"""partnorm command line.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import series as ser
from . import stats, verify, zeta
from .partitions import class_from_name, enumerate_partitions
from .report import fmt_value

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace, so output re-serializes identically."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


# --------------------------------------------------------------------------
# enum
# --------------------------------------------------------------------------


def cmd_enum(args) -> int:
    try:
        cls = class_from_name(args.cls)
    except ValueError as e:
        raise UsageError(str(e)) from None
    ser.require_enumerable(args.n)
    rows = enumerate_partitions(args.n, cls)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["parts", "size", "length", "norm", "rank"])
        for lam in rows:
            w.writerow([" ".join(map(str, lam.parts)), lam.size, lam.length, lam.norm, lam.rank])
    else:
        for lam in rows:
            _out(dumps({"parts": list(lam.parts), "size": lam.size, "length": lam.length,
                        "norm": str(lam.norm), "rank": lam.rank}))
    return 0


# --------------------------------------------------------------------------
# seq
# --------------------------------------------------------------------------

SEQUENCES = {
    "max-norm": (0, lambda n: stats.max_norm(n).value),
    "max-norm-odd": (0, lambda n: stats.max_norm_odd(n).value),
    "max-norm-distinct": (0, lambda n: stats.max_norm_distinct(n).value),
    "max-norm-rr": (0, lambda n: stats.max_norm_rr(n).value),
    "p": (0, ser.pentagonal_p),
    "p-dot": (0, ser.p_dot),
    "lehmer": (0, stats.lehmer_sum),
    "lehmer-distinct": (0, stats.lehmer_sum_distinct),
    "mult-partitions": (1, zeta.multiplicative_partitions),
}


def cmd_seq(args) -> int:
    if args.name not in SEQUENCES:
        raise UsageError(f"unknown sequence {args.name!r}; choose from {', '.join(SEQUENCES)}")
    start, fn = SEQUENCES[args.name]
    if args.n_max < start:
        raise UsageError(f"{args.name} starts at n={start}")
    terms = [(n, fmt_value(fn(n))) for n in range(start, args.n_max + 1)]
    if args.format == "json":
        _out(dumps({"name": args.name, "terms": [{"n": n, "a": a} for n, a in terms]}))
    else:
        for n, a in terms:
            _out(f"{n} {a}")
    return 0


# --------------------------------------------------------------------------
# zeta
# --------------------------------------------------------------------------


def _emit_eval(res: zeta.EvalResult, fmt: str) -> None:
    if fmt == "json":
        _out(dumps(res.to_dict()))
        return
    bound = "unavailable" if res.tail_bound is None else f"{res.tail_bound:.3e}"
    _out(f"{res.value!r} tail_bound={bound} terms_used={res.terms_used}")


def cmd_zeta(args) -> int:
    fam = args.family
    if fam == "product":
        res = zeta.partition_zeta_product(zeta.PartSetSpec.parse(args.set), args.s, args.tol)
    elif fam == "distinct":
        res = zeta.distinct_zeta(args.s, args.tol)
    elif fam == "nuclear-dirichlet":
        res = zeta.nuclear_zeta_dirichlet(args.s, args.nu_max)
    elif fam == "fixed-length":
        if args.k is None:
            raise UsageError("fixed-length needs --k")
        if args.exact:
            pv = zeta.fixed_length_zeta_faa(args.s, args.k, exact=True)
            _out(dumps({"coeff": fmt_value(pv.coeff), "power": pv.power}) if args.format == "json" else str(pv))
            return 0
        if args.cutoff is not None:
            res = zeta.fixed_length_zeta_direct(args.s, args.k, args.cutoff)
        else:
            res = zeta.fixed_length_zeta_faa(args.s, args.k)
    elif fam == "golden":
        res = zeta.golden_ratio_series(args.terms, args.tol)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam!r}")
    _emit_eval(res, args.format)
    return 0


# --------------------------------------------------------------------------
# series, sample, verify
# --------------------------------------------------------------------------

SERIES = {
    "euler": ser.euler_partition_series,
    "norm-weighted": lambda order: ser.weighted_partition_series(order, lambda n: n),
    "reciprocal-norm": lambda order: ser.weighted_partition_series(order, lambda n: Fraction(1, n)),
    "reciprocal-norm-distinct": lambda order: ser.weighted_distinct_series(order, lambda n: Fraction(1, n)),
    "distinct": lambda order: ser.weighted_distinct_series(order, 1),
}


def cmd_series(args) -> int:
    if args.name not in SERIES:
        raise UsageError(f"unknown series {args.name!r}; choose from {', '.join(SERIES)}")
    _out(SERIES[args.name](args.order).to_json())
    return 0


def cmd_sample(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    for lam in stats.iter_macmahon_samples(args.n, args.count, args.seed):
        if args.format == "jsonl":
            _out(dumps({"parts": list(lam.parts)}))
        else:
            _out(" ".join(map(str, lam.parts)))
    return 0


def cmd_verify(args) -> int:
    try:
        names = verify.resolve(args.suite)
        reports = verify.run_suites(names, args.n_max, args.jobs)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose 'all' or one of {', '.join(sorted(verify.SUITES))}") from None
    for r in reports:
        if args.format == "jsonl":
            _out(dumps(r.to_dict()))
        else:
            line = f"{r.status.value:<12} {r.identity}  lhs={r.lhs} rhs={r.rhs}"
            if r.error is not None:
                line += f" err={r.error:.3e}"
            if r.paper_flag:
                line += " [flagged]"
            if r.notes:
                line += f"  # {r.notes}"
            _out(line)
    bad = verify.failed(reports, args.allow_paper_flags)
    flagged = sum(1 for r in reports if r.paper_flag)
    print(f"{len(reports)} reports, {flagged} flagged, {len(bad)} failing", file=sys.stderr)
    return 1 if bad else 0


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="partnorm", description="Exact tools for the product of parts of a partition.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enum", help="list partitions of N in a class")
    e.add_argument("n", type=int)
    e.add_argument("--class", dest="cls", default="all",
                   help="all, distinct, odd, even, prime, nuclear, rr, gg, schur or parts:2,3,5")
    e.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    e.set_defaults(func=cmd_enum)

    s = sub.add_parser("seq", help="export a sequence in b-file form")
    s.add_argument("name", help=", ".join(SEQUENCES))
    s.add_argument("n_max", type=int)
    s.add_argument("--format", choices=["bfile", "json"], default="bfile")
    s.set_defaults(func=cmd_seq)

    z = sub.add_parser("zeta", help="evaluate a partition zeta function")
    z.add_argument("family", choices=["product", "distinct", "nuclear-dirichlet", "fixed-length", "golden"])
    z.add_argument("--set", default="primes", help="primes, even, nuclear, from:B or list:2,3,5")
    z.add_argument("--s", type=float, default=2.0)
    z.add_argument("--k", type=int)
    z.add_argument("--exact", action="store_true", help="exact rational times a power of pi (even integer s)")
    z.add_argument("--cutoff", type=int, help="fixed-length: truncate parts at this bound instead")
    z.add_argument("--tol", type=float, default=1e-10)
    z.add_argument("--terms", type=int, help="golden: number of terms")
    z.add_argument("--nu-max", type=int, default=5000)
    z.add_argument("--format", choices=["text", "json"], default="text")
    z.set_defaults(func=cmd_zeta)

    r = sub.add_parser("series", help="coefficients of a generating function as JSON")
    r.add_argument("name", help=", ".join(SERIES))
    r.add_argument("--order", type=int, default=20)
    r.set_defaults(func=cmd_series)

    m = sub.add_parser("sample", help="draw MacMahon-distributed partitions")
    m.add_argument("n", type=int)
    m.add_argument("--count", type=int, default=1)
    m.add_argument("--seed", type=int, default=stats.DEFAULT_SEED)
    m.add_argument("--format", choices=["text", "jsonl"], default="text")
    m.set_defaults(func=cmd_sample)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("suite", help="'all' or one of: " + ", ".join(sorted(verify.SUITES)))
    v.add_argument("--n-max", type=int, help="override the suite's range")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["text", "jsonl"], default="text")
    v.add_argument("--allow-paper-flags", action=argparse.BooleanOptionalAction, default=True,
                   help="flagged discrepancies in published formulas do not fail the run")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, ZeroDivisionError) as e:
        print(f"partnorm {args.command}: error: {e}", file=sys.stderr)
        return USAGE_ERROR
    except BrokenPipeError:  # pragma: no cover
        return 0


if __name__ == "__main__":
    sys.exit(main())
