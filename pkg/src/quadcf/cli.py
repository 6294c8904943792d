"""Command-line front end.

Exit codes: 0 success, 1 runtime or domain failure, 2 invalid input.
All CSV output uses ',' separators, '.' decimals and LF line endings.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from collections import Counter
from fractions import Fraction

from . import divisors, stats, surd, topograph
from .errors import EmptyOmega, InputOutOfRange, InvalidWeight, QuadCFError

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

SUMMARY_COLUMNS = ["radius", "omega_size", "t_hat_num", "t_hat_den", "a_mean_num",
                   "a_mean_den", "a_prime_num", "a_prime_den", "w", "discrepancy"]
HISTOGRAM_COLUMNS = ["k", "arnold_freq", "weighted_freq", "theoretical"]


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def _dec(x) -> str:
    """15 significant digits, independent of locale."""
    return format(float(x), ".15g")


def _tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _weight(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"w must lie strictly between 0 and 1, got {text}")
    return value


# ---------------------------------------------------------------------------

def cmd_period(args, out) -> int:
    pt = surd.ProblemPoint(args.p, args.q)
    kind = surd.classify(pt)
    if kind is surd.Kind.NONREAL:
        print(f"error: ({pt.p}, {pt.q}) has no real root (discriminant {surd.discriminant(pt)})",
              file=sys.stderr)
        return EXIT_USAGE
    if kind is surd.Kind.RATIONAL:
        print(f"error: ({pt.p}, {pt.q}) has a rational root (discriminant "
              f"{surd.discriminant(pt)} is a square)", file=sys.stderr)
        return EXIT_USAGE
    delta = surd.discriminant(pt)
    norm = surd.normalize(pt)
    cf = surd.cf_period(pt)
    sieve = divisors.build_sieve(max(1, delta // 4))
    f = divisors.f_of_discriminant(delta, sieve)
    check = divisors.lemma3_bound(pt, cf, sieve)
    status = ("tight" if check.lhs == check.rhs else "holds") if check.holds else "violated"
    rc = topograph.river_cycle(norm)
    match = topograph.cycle_to_period(rc, cf)
    row = {
        "p": pt.p, "q": pt.q, "kind": kind.value,
        "normalized": f"({norm.p},{norm.q})", "delta": delta, "a0": cf.a0,
        "period": _tuple(cf.period), "T": cf.T, "sum": check.lhs, "f": f,
        "bound": check.rhs, "status": status, "n1": rc.n1, "runs": _tuple(rc.runs),
        "river": "match" if match else "mismatch",
    }
    if args.format == "csv":
        w = _writer(out)
        w.writerow(row.keys())
        w.writerow(row.values())
    else:
        for key, value in row.items():
            out.write(f"{key}={value}\n")
    return EXIT_OK if match and check.holds else EXIT_FAILURE


def write_sweep_csv(report: stats.SweepReport, out) -> None:
    w = _writer(out)
    w.writerow(SUMMARY_COLUMNS)
    w.writerow([report.radius, report.omega_size,
                report.t_hat.numerator, report.t_hat.denominator,
                report.a_mean.numerator, report.a_mean.denominator,
                report.a_prime.numerator, report.a_prime.denominator,
                repr(report.w), repr(report.discrepancy)])
    out.write("\n")
    w.writerow(HISTOGRAM_COLUMNS)
    k_cap = report.arnold_hist.k_cap
    for k in range(1, k_cap + 1):
        w.writerow([k, repr(report.arnold_hist[k]), repr(report.weighted_hist[k]),
                    repr(stats.theoretical_kuzmin(k))])
    w.writerow(["overflow", repr(report.arnold_hist.overflow),
                repr(report.weighted_hist.overflow), repr(stats.theoretical_kuzmin_tail(k_cap))])


def write_sweep_text(report: stats.SweepReport, out) -> None:
    def frac(x: Fraction) -> str:
        return f"{x.numerator}/{x.denominator} ({_dec(x)})"

    out.write(f"radius        {report.radius}\n")
    out.write(f"omega_size    {report.omega_size}\n")
    out.write(f"t_hat         {frac(report.t_hat)}\n")
    out.write(f"a_mean        {frac(report.a_mean)}\n")
    out.write(f"a_prime       {frac(report.a_prime)}\n")
    out.write(f"w             {report.w}\n")
    out.write(f"discrepancy   {_dec(report.discrepancy)}\n")
    out.write(f"runtime       {report.runtime:.3f} s\n\n")
    out.write(f"{'k':>8} {'arnold':>12} {'weighted':>12} {'theory':>12}\n")
    k_cap = report.arnold_hist.k_cap
    for k in range(1, min(k_cap, 20) + 1):
        out.write(f"{k:>8} {report.arnold_hist[k]:>12.6f} {report.weighted_hist[k]:>12.6f} "
                  f"{stats.theoretical_kuzmin(k):>12.6f}\n")
    if k_cap > 20:
        out.write(f"{'...':>8}\n")
    out.write(f"{'overflow':>8} {report.arnold_hist.overflow:>12.6f} "
              f"{report.weighted_hist.overflow:>12.6f} {stats.theoretical_kuzmin_tail(k_cap):>12.6f}\n")


def cmd_sweep(args, out) -> int:
    report = stats.sweep(args.radius, w=args.w, k_cap=args.kcap, workers=args.threads)
    buf = io.StringIO()
    (write_sweep_csv if args.format == "csv" else write_sweep_text)(report, buf)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return EXIT_OK


def boundcheck(R: int):
    """Check the period-sum bound on every point of Omega_R.

    Returns (points, violations, slack histogram of rhs - lhs).
    """
    deltas, counts = stats.discriminant_counts(R)
    if len(deltas) == 0:
        raise EmptyOmega(f"Omega_{R} is empty")
    sieve = divisors.sieve_for_radius(R)
    slack = Counter()
    violations = 0
    for delta, c in zip(deltas, counts):
        delta, c = int(delta), int(c)
        pt = surd.normalize((delta % 2, (delta - delta % 2) // 4))
        check = divisors.lemma3_bound(pt, surd.cf_period(pt), sieve)
        slack[check.rhs - check.lhs] += c
        if not check.holds:
            violations += c
    return int(counts.sum()), violations, slack


def cmd_boundcheck(args, out) -> int:
    points, violations, slack = boundcheck(args.radius)
    w = _writer(out)
    w.writerow(["radius", "points", "violations", "tight"])
    w.writerow([args.radius, points, violations, slack.get(Fraction(0), 0)])
    out.write("\n")
    w.writerow(["slack", "count"])
    for s in sorted(slack):
        w.writerow([str(s), slack[s]])
    return EXIT_OK if violations == 0 else EXIT_FAILURE


def cmd_sqrtmean(args, out) -> int:
    value = stats.mean_period_sqrt(args.qmax)
    w = _writer(out)
    w.writerow(["qmax", "t0_hat_num", "t0_hat_den", "t0_hat"])
    w.writerow([args.qmax, value.numerator, value.denominator, _dec(value)])
    return EXIT_OK


def cmd_equidist(args, out) -> int:
    value = stats.equidistribution_discrepancy(args.count, precision=args.precision)
    w = _writer(out)
    w.writerow(["count", "precision", "discrepancy"])
    w.writerow([args.count, args.precision, repr(value)])
    return EXIT_OK


def cmd_kuzmin(args, out) -> int:
    w = _writer(out)
    w.writerow(["k", "theoretical"])
    for k in range(1, args.kmax + 1):
        w.writerow([k, repr(stats.theoretical_kuzmin(k))])
    w.writerow(["overflow", repr(stats.theoretical_kuzmin_tail(args.kmax))])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadcf",
        description="Periodic continued fractions of roots of x^2 + p x = q and their statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("period", help="analyse a single point (p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_period)

    s = sub.add_parser("sweep", help="statistics over the disc of radius R")
    s.add_argument("--radius", type=_positive_int, required=True)
    s.add_argument("--w", type=_weight, default=0.5)
    s.add_argument("--kcap", type=_positive_int, default=stats.DEFAULT_KCAP)
    s.add_argument("--threads", type=_positive_int, default=1,
                   help="worker processes; output does not depend on this")
    s.add_argument("--out", default=None, help="write to this file instead of stdout")
    s.add_argument("--format", choices=("csv", "text"), default="csv")
    s.set_defaults(func=cmd_sweep)

    b = sub.add_parser("boundcheck", help="check the period-sum bound over the disc")
    b.add_argument("--radius", type=_positive_int, required=True)
    b.set_defaults(func=cmd_boundcheck)

    q = sub.add_parser("sqrtmean", help="mean period of sqrt(q), q = 1..Q")
    q.add_argument("--qmax", type=_positive_int, required=True)
    q.set_defaults(func=cmd_sqrtmean)

    e = sub.add_parser("equidist", help="star discrepancy of the first N fractional parts")
    e.add_argument("--count", type=_positive_int, required=True)
    e.add_argument("--precision", type=_positive_int, default=stats.DEFAULT_PRECISION)
    e.set_defaults(func=cmd_equidist)

    k = sub.add_parser("kuzmin", help="print Gauss-Kuzmin masses")
    k.add_argument("--kmax", type=_positive_int, default=20)
    k.set_defaults(func=cmd_kuzmin)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputOutOfRange, InvalidWeight) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadCFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
