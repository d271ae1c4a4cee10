"""Command-line entry point: ``blockradius {radius,bounds,verify,lemmas}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 numerical failure.  Numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from . import bounds as bd
from .errors import BlockRadiusError, NumericalFailure, NotPSD
from .harness import records_to_csv, run_checks, summaries_to_json, summarize
from .ensembles import EnsembleSpec, Kind
from .lemmas import run_lemma_suite
from .linalg import check_same_dim, inequality_slack, load_matrix
from .numradius import numerical_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def fmt(x) -> str:
    return f"{float(x):.12g}"


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _alpha_list(text):
    try:
        alphas = [float(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if not alphas:
        raise argparse.ArgumentTypeError("empty alpha list")
    bad = [a for a in alphas if not 0.0 <= a <= 1.0]
    if bad:
        raise argparse.ArgumentTypeError(f"alphas must lie in [0, 1], got {bad}")
    return alphas


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="blockradius", description="Numerical radius bounds for 2 x 2 block matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tol = argparse.ArgumentParser(add_help=False)
    tol.add_argument("--tol", type=_positive_float, default=1e-9,
                     help="certificate width for w and relative inequality slack (default 1e-9)")

    p = sub.add_parser("radius", parents=[tol], help="certified numerical radius of one matrix")
    p.add_argument("file")

    p = sub.add_parser("bounds", parents=[tol], help="evaluate every bound on [[0, B], [C, 0]]")
    p.add_argument("B")
    p.add_argument("C")
    p.add_argument("--A", dest="A", metavar="FILE")
    p.add_argument("--D", dest="D", metavar="FILE")
    p.add_argument("--alpha", type=_alpha_list, default=list(bd.ALPHA_GRID), help="comma-separated alphas")
    p.add_argument("--prop33", action="store_true", help="also compare ||B+C|| bounds for self-adjoint B, C")

    p = sub.add_parser("verify", parents=[tol], help="run harness checks over a random ensemble")
    p.add_argument("--ensemble", required=True, choices=[k.value for k in Kind])
    p.add_argument("--dim", type=_positive_int, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--checks", default="all", help="comma-separated check names, or 'all'")
    p.add_argument("--out", help="report path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="csv")

    p = sub.add_parser("lemmas", parents=[tol], help="randomized lemma suite")
    p.add_argument("--trials", type=_positive_int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=_positive_int, default=3)
    return parser


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_radius(args, out) -> int:
    A = load_matrix(args.file)
    cert = numerical_radius(A, tol=args.tol)
    rows = [
        ("estimate", cert.estimate),
        ("lower_witness", cert.lower_witness),
        ("upper_certificate", cert.upper_certificate),
        ("width", cert.width),
        ("theta_star", cert.theta_star),
    ]
    for name, value in rows:
        print(f"{name:<18} {fmt(value)}", file=out)
    print(f"{'evaluations':<18} {cert.evaluations}", file=out)
    print("witness_vector", file=out)
    for z in cert.witness_vector:
        print(f"  {fmt(z.real)} {fmt(z.imag)}", file=out)
    return EXIT_OK


def _bound_row(report, cert, rel):
    """Table row comparing `report` with the certified ``w`` enclosure."""
    k = report.exponent
    if report.kind is bd.BoundKind.UPPER:
        w_k = cert.lower_witness**k
        gap = report.value - w_k
    else:
        w_k = cert.upper_certificate**k
        gap = w_k - report.value
    ok = gap >= -inequality_slack(report.value, w_k, rel)
    alpha = "-" if report.alpha is None else fmt(report.alpha)
    return [report.name, report.kind.value, str(k), alpha, fmt(report.value), fmt(w_k), fmt(gap),
            "ok" if ok else "VIOLATED"], ok


def _print_table(rows, out):
    header = ["bound", "kind", "power", "alpha", "value", "w^power", "gap", "status"]
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    for row in [header, *rows]:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip(), file=out)


def cmd_bounds(args, out) -> int:
    B, C = load_matrix(args.B), load_matrix(args.C)
    check_same_dim(B, C)
    if (args.A is None) != (args.D is None):
        raise UsageError("bounds: --A and --D must be given together")
    rel = args.tol
    pieces = bd.BlockPieces(B, C)
    cert = numerical_radius(pieces.S, tol=args.tol)
    print(f"w(S) = {fmt(cert.estimate)}  in [{fmt(cert.lower_witness)}, {fmt(cert.upper_certificate)}]", file=out)

    reports = [
        bd.bound_th1_upper(B, C, pieces),
        bd.bound_th1eqn_upper(B, C, pieces),
        bd.bound_th5_lower(B, C, pieces),
        bd.bound_th2_upper_sq(B, C, pieces),
        bd.bound_th6_lower_sq(B, C, pieces),
        bd.bound_th3_lower_sq(B, C, pieces),
        bd.bound_th4_lower_sq(B, C, pieces),
        *(bd.bound_th7_upper_4(B, C, a, pieces) for a in args.alpha),
    ]
    rows, violated = [], 0
    for rep in reports:
        row, ok = _bound_row(rep, cert, rel)
        rows.append(row)
        violated += not ok

    if args.A is not None:
        A, D = load_matrix(args.A), load_matrix(args.D)
        check_same_dim(A, B, D)
        T = bd.make_full(A, B, C, D).assembled
        full = numerical_radius(T, tol=args.tol)
        for a in args.alpha:
            for rep in (bd.bound_th25_upper_4(A, B, C, D, a, pieces), bd.bound_bk21_upper_4(A, B, C, D, a, pieces)):
                row, ok = _bound_row(rep, full, rel)
                rows.append(row)
                violated += not ok
    _print_table(rows, out)
    if args.A is not None:
        print(f"w(T) = {fmt(full.estimate)}  for T = [[A, B], [C, D]]", file=out)

    if args.prop33:
        violated += _prop33_section(B, C, rel, out)

    if violated:
        print(f"{violated} bound(s) violated; this indicates a numerical or implementation error", file=out)
        return EXIT_FAIL
    return EXIT_OK


def _prop33_section(B, C, rel, out) -> int:
    rep = bd.bound_prop33(B, C)
    c = rep.components
    lhs = max(c["norm_B_plus_C"], c["norm_B_minus_C"])
    print("sums of self-adjoint operators", file=out)
    print(f"  max(||B+C||, ||B-C||)  {fmt(lhs)}", file=out)
    print(f"  sqrt(prop33 bound)     {fmt(math.sqrt(rep.value))}", file=out)
    print(f"  ||B+C||                {fmt(c['norm_B_plus_C'])}", file=out)
    try:
        print(f"  kittaneh2002 bound     {fmt(bd.kittaneh2002_bound(B, C))}", file=out)
    except NotPSD:
        print("  kittaneh2002 bound     n/a (needs positive semidefinite B, C)", file=out)
    ok = lhs**2 - rep.value <= inequality_slack(lhs**2, rep.value, rel)
    if not ok:
        print("  prop33 VIOLATED", file=out)
    return int(not ok)


def cmd_verify(args, out) -> int:
    spec = EnsembleSpec(Kind.parse(args.ensemble), args.dim, args.trials, args.seed)
    records = run_checks([spec], args.checks, rel=args.tol)
    summaries = summarize(records)
    report = records_to_csv(records) if args.format == "csv" else summaries_to_json(summaries)
    if args.out:
        Path(args.out).write_text(report, encoding="utf-8")
    else:
        out.write(report)

    failures = sum(s.failures for s in summaries)
    stream = sys.stderr if not args.out else out
    for s in summaries:
        max_abs = max(abs(r.gap) for r in records if r.check_name == s.check_name)
        status = "PASS" if s.failures == 0 else "FAIL"
        print(f"{status} {s.check_name}: {s.trials} samples, {s.failures} failures, "
              f"min gap {fmt(s.min_gap)}, max |gap| {fmt(max_abs)}", file=stream)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_lemmas(args, out) -> int:
    summaries = run_lemma_suite(args.trials, args.seed, args.dim, rel=args.tol)
    for s in summaries:
        status = "PASS" if s.passed else "FAIL"
        print(f"{status} {s.name}: {s.instances} instances, {s.failures} failures, min gap {fmt(s.min_gap)}",
              file=out)
    return EXIT_OK if all(s.passed for s in summaries) else EXIT_FAIL


COMMANDS = {"radius": cmd_radius, "bounds": cmd_bounds, "verify": cmd_verify, "lemmas": cmd_lemmas}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"numerical failure ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (BlockRadiusError, ValueError, OSError) as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
