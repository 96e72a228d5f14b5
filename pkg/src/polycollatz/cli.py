"""Command-line front end.

Usage:
    polycollatz traj "x^2+1" --map T --format json
    polycollatz stop 0x5 --method both
    polycollatz family --a 1 --b 0 --n 2 --verify
    polycollatz ap-runs --a 2 --b 1 --d-min 3 --d-max 10
    polycollatz sweep --d-min 0 --d-max 16 --threads 4 --out sweep.csv
    polycollatz fp --p 3 "2*x^2+1"
    polycollatz fp --p 5 --sweep --d-max 4
    polycollatz check --quick

Exit status: 0 on success, 1 on a computation error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_form as cf
from .checks import run_checks
from .dynamics import (
    MapKind,
    default_budget,
    stopping_time_direct,
    stopping_time_reduced,
    trajectory,
)
from .errors import PolyCollatzError, PolySyntaxError
from .fp import is_prime, parse_fp
from .fp_dynamics import fp_bound, fp_bound_sweep, fp_stopping_time
from .gf2 import format_poly, parse
from .sweep import (
    CAP_ENV,
    degree_cap,
    growth_report,
    rows_to_csv,
    rows_to_json,
    sigma_direct,
    sweep,
)

__all__ = ["main", "build_parser"]

_CROSS_CHECK_MAX_DEG = 12


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text):
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycollatz",
        description="Collatz dynamics and stopping times over GF(2)[x] and F_p[x].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("traj", help="print the trajectory of a polynomial")
    p.add_argument("poly")
    p.add_argument("--map", choices=[m.value for m in MapKind], default="T")
    p.add_argument("--budget", type=_positive)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("stop", help="stopping time under T")
    p.add_argument("poly")
    p.add_argument("--method", choices=("direct", "reduced", "both"), default="reduced")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("family", help="closed-form stopping time of (x^a(x+1)^b)^n+1")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--verify", action="store_true", help="also iterate T directly")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("ap-runs", help="arithmetic runs of family stopping times")
    p.add_argument("--a", type=_nonneg, required=True)
    p.add_argument("--b", type=_nonneg, required=True)
    p.add_argument("--d-min", type=_nonneg, required=True)
    p.add_argument("--d-max", type=_nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("sweep", help="exhaustive sigma(d) / rho(d) statistics")
    p.add_argument("--d-min", type=_nonneg, required=True)
    p.add_argument("--d-max", type=_nonneg, required=True)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument(
        "--cross-check",
        action="store_true",
        help=f"recompute sigma by direct iteration for d <= {_CROSS_CHECK_MAX_DEG}",
    )
    p.add_argument("--growth", action="store_true", help="emit growth ratios instead")

    p = sub.add_parser("fp", help="pre-periods of the F_p[x] map")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("poly", nargs="?")
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--d-max", type=_nonneg)
    p.add_argument("--budget", type=_positive)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("check", help="run the cross-validation suites")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quick", action="store_const", dest="scale", const="quick")
    g.add_argument("--full", action="store_const", dest="scale", const="full")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(scale="quick")
    return parser


def _parse_poly(parser, text):
    try:
        return parse(text)
    except PolySyntaxError as exc:
        parser.error(f"invalid polynomial {text!r}: {exc}")


def _validate(parser, args):
    """All flag checks happen here, before any computation."""
    if args.command in ("traj", "stop"):
        args.poly = _parse_poly(parser, args.poly)
    elif args.command in ("family", "ap-runs"):
        if args.a == 0 and args.b == 0:
            parser.error("--a and --b cannot both be 0")
        if args.command == "ap-runs":
            if args.d_min > args.d_max:
                parser.error("--d-min exceeds --d-max")
            if (1 << args.d_min) < args.a + args.b:
                parser.error("--d-min must satisfy 2^d_min >= a+b")
    elif args.command == "sweep":
        if args.d_min > args.d_max:
            parser.error("--d-min exceeds --d-max")
        try:
            cap = degree_cap()
        except ValueError as exc:
            parser.error(str(exc))
        if args.d_max > cap:
            parser.error(f"--d-max {args.d_max} exceeds the degree cap {cap} (see {CAP_ENV})")
    elif args.command == "fp":
        if not is_prime(args.p):
            parser.error(f"--p must be prime, got {args.p}")
        if args.sweep:
            if args.poly is not None:
                parser.error("give either a polynomial or --sweep, not both")
            if args.d_max is None:
                parser.error("--sweep requires --d-max")
        else:
            if args.poly is None:
                parser.error("a polynomial or --sweep is required")
            try:
                args.poly = parse_fp(args.poly, args.p)
            except PolySyntaxError as exc:
                parser.error(f"invalid polynomial: {exc}")


def _emit(out, text):
    out.write(text if text.endswith("\n") else text + "\n")


def _cmd_traj(args, out):
    kind = MapKind(args.map)
    budget = args.budget or default_budget(max(args.poly.bits.bit_length() - 1, 0), kind)
    tr = trajectory(args.poly, kind, budget)
    if args.format == "json":
        _emit(out, json.dumps(tr.to_json(), separators=(",", ":")))
        return 0
    for i, s in enumerate(tr.steps):
        out.write(f"{i}\t{format_poly(s, 'hex')}\t{format_poly(s)}\n")
    if tr.truncated:
        out.write(f"# truncated after {budget} steps\n")
    else:
        out.write(f"# t_min = {tr.t_min}\n")
    return 0


def _cmd_stop(args, out, err):
    f = args.poly
    res = {}
    if args.method in ("direct", "both"):
        res["direct"] = stopping_time_direct(f).t_min
    if args.method in ("reduced", "both"):
        res["reduced"] = stopping_time_reduced(f).t_min
    values = set(res.values())
    if len(values) != 1:
        err.write(f"engines disagree on {format_poly(f, 'hex')}: {res}\n")
        return 1
    (t,) = values
    if args.format == "json":
        _emit(out, json.dumps({"input": format_poly(f, "hex"), "t_min": t, **res}))
    else:
        _emit(out, str(t))
    return 0


def _cmd_family(args, out, err):
    params = cf.FamilyParams(args.a, args.b, args.n)
    t = cf.family_stopping_time(params)
    direct = None
    if args.verify:
        direct = stopping_time_direct(cf.family_poly(params)).t_min
        if direct != t:
            err.write(f"closed form {t} disagrees with direct iteration {direct}\n")
            return 1
    if args.format == "json":
        rec = {"a": args.a, "b": args.b, "n": args.n, "t_min": t}
        if direct is not None:
            rec["verified"] = True
        _emit(out, json.dumps(rec))
    else:
        _emit(out, str(t))
    return 0


def _cmd_ap_runs(args, out):
    runs = cf.ap_runs(args.a, args.b, args.d_min, args.d_max)
    if args.format == "json":
        _emit(out, json.dumps([r.to_row() for r in runs], indent=2))
    else:
        out.write(cf.ap_runs_csv(runs))
    return 0


def _cmd_sweep(args, out, err):
    rows = sweep(args.d_min, args.d_max, parallelism=args.threads)
    if args.cross_check:
        for r in rows:
            if r.d <= _CROSS_CHECK_MAX_DEG and sigma_direct(r.d) != r.sigma:
                err.write(f"sigma mismatch at d={r.d}\n")
                return 1
    if args.growth:
        text = json.dumps(growth_report(rows), indent=2) + "\n"
    elif args.format == "json":
        text = rows_to_json(rows)
    else:
        text = rows_to_csv(rows)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_fp(args, out):
    if args.sweep:
        reports = fp_bound_sweep(args.p, args.d_max)
        if args.format == "json":
            _emit(out, json.dumps([r.to_json() for r in reports], indent=2))
        else:
            out.write("p,d,count,max_pre_period,bound\n")
            for r in reports:
                out.write(f"{r.p},{r.d},{r.count},{r.max_pre_period},{r.bound}\n")
        return 0 if all(r.ok for r in reports) else 1
    f = args.poly
    res = fp_stopping_time(f, args.budget)
    if args.format == "json":
        rec = {"input": f.to_json(), **res.to_json(), "bound": fp_bound(f.p, f.degree)}
        _emit(out, json.dumps(rec))
    else:
        out.write(f"pre_period\t{res.pre_period}\n")
        out.write(f"cycle_length\t{res.cycle_length}\n")
        out.write(f"cycle_entry\t{res.cycle_entry}\n")
    return 0


def _cmd_check(args, out):
    results = run_checks(args.scale, args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        out.write(f"{status}  {r.name}  ({r.cases} cases, {r.seconds:.2f}s)\n")
        for f in r.failures:
            out.write(f"      {f}\n")
    return 0 if all(r.passed for r in results) else 1


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "traj":
            return _cmd_traj(args, out)
        if args.command == "stop":
            return _cmd_stop(args, out, err)
        if args.command == "family":
            return _cmd_family(args, out, err)
        if args.command == "ap-runs":
            return _cmd_ap_runs(args, out)
        if args.command == "sweep":
            return _cmd_sweep(args, out, err)
        if args.command == "fp":
            return _cmd_fp(args, out)
        return _cmd_check(args, out)
    except PolyCollatzError as exc:
        err.write(f"{exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
