"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage, parse, or
precondition error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import runcache
from .bounds import bound_report
from .errors import CacheIntegrityError, CapabilityError, DomainError, PlanarSpectraError
from .extremal import MAX_SEARCH_ORDER, family_classes, search_classes
from .graph import BUILTINS, cal_h
from .graph6 import graph6_decode
from .spectral import CSV_HEADER, DEFAULT_TOL, spectral_radius
from .verify import DEFAULT_SEED, SUITES

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("planar_spectra")


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = (int(p) for p in text.split("..", 1))
        else:
            a = b = int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected A..B") from exc
    if b < a:
        raise UsageError(f"reversed range {text!r}")
    return range(a, b + 1)


def _orders(args, default: range | None = None) -> range:
    if args.n_range is not None:
        return parse_range(args.n_range)
    if args.n is not None:
        return parse_range(args.n)
    if default is None:
        raise UsageError("give --n or --n-range")
    return default


def _emit(rows: list[list[str]], header: list[str], fmt: str, out) -> None:
    if fmt == "md":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "---|" * len(header) + "\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _open_out(path: str | None):
    return open(path, "w", newline="") if path else contextlib.nullcontext(sys.stdout)


def cmd_rho(args) -> int:
    status = EXIT_OK
    rows: list[list[str]] = []
    if args.builtin:
        if args.n is None:
            raise UsageError("--builtin needs --n")
        graphs = [(args.builtin, BUILTINS[args.builtin](args.n))]
    elif args.input:
        text = Path(args.input).read_text(encoding="ascii", errors="surrogateescape")
        graphs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                graphs.append((f"line {lineno}", graph6_decode(line.strip())))
            except PlanarSpectraError as exc:
                print(f"{args.input}:{lineno}: {exc}", file=sys.stderr)
                status = EXIT_USAGE
    else:
        raise UsageError("give an input file or --builtin")
    for label, g in graphs:
        try:
            r = spectral_radius(g, args.tol)
        except PlanarSpectraError as exc:
            print(f"{label}: {exc}", file=sys.stderr)
            status = EXIT_USAGE
            continue
        rows.append(r.csv_row(g))
    with _open_out(args.out) as out:
        _emit(rows, CSV_HEADER, args.format, out)
    return status


def cmd_bounds(args) -> int:
    orders = _orders(args)
    if orders.start < 10:
        raise UsageError("bounds needs n >= 10")
    header = ["n", "tier", "lower", "rho_H_lo", "rho_H_hi", "upper", "x2_bound", "consistent"]
    rows = []
    for n in orders:
        rep = bound_report(n)
        r = spectral_radius(cal_h(n), args.tol)
        if args.format == "md":
            rows.append([
                str(n),
                f"{rep.lower_tier:.3f}",
                f"{rep.lower:.6f}",
                f"{r.rho_lo:.10f}",
                f"{r.rho_hi:.10f}",
                f"{rep.upper:.6f}",
                f"{rep.x2_bound:.5f}",
                "yes" if rep.consistent and rep.lower < r.rho_lo and r.rho_hi < rep.upper else "NO",
            ])
        else:
            rows.append([
                str(n), repr(rep.lower_tier), repr(rep.lower), repr(r.rho_lo), repr(r.rho_hi),
                repr(rep.upper), repr(rep.x2_bound), str(rep.consistent).lower(),
            ])
    with _open_out(args.out) as out:
        if args.format == "md":
            out.write("lower = c + sqrt(2n - 15/4) < rho(H_n) <= varrho < upper = 2 + sqrt(2n - 6)\n\n")
        _emit(rows, header, args.format, out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    fn, default = SUITES[args.suite]
    orders = _orders(args, default)
    kwargs = {"workers": args.workers} if args.suite == "extremal" else {}
    result = fn(orders, args.seed, **kwargs)
    status = "PASS" if result.passed else "FAIL"
    print(f"{result.suite}: {status} ({result.checks} checks, {len(result.failures)} failures)")
    if result.failures:
        out = Path(args.out or ".")
        out.mkdir(parents=True, exist_ok=True)
        g6 = out / f"failures-{result.suite}.g6"
        g6.write_text("".join(f.graph6 + "\n" for f in result.failures))
        ctx = out / f"failures-{result.suite}.json"
        ctx.write_text(json.dumps([f.__dict__ for f in result.failures], indent=2) + "\n")
        print(f"failure artifacts: {g6}, {ctx}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    n = args.n
    if not 4 <= n <= MAX_SEARCH_ORDER:
        raise CapabilityError(f"enumerate supports 4 <= n <= {MAX_SEARCH_ORDER}, got {n}")
    root = Path(args.out) if args.out else runcache.default_root()
    d = runcache.run_dir(root, n)
    if (d / runcache.REPORT).exists() and not args.force:
        report = runcache.verify_run(root, n)
        print(f"{d}: cache verified ({report['iso_classes']} classes, argmax {report['argmax_graph6']})")
        return EXIT_OK
    fam = family_classes(n, args.workers)
    report, results = search_classes(fam, args.tol)
    runcache.write_run(root, fam, results, report)
    print(
        f"{d}: {report.family_size} labelled, {report.iso_classes} classes, "
        f"argmax {report.argmax_graph6} fan_apex={report.is_fan_apex}"
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-spectra", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_range=True):
        if n_range:
            sp.add_argument("--n", help="order N or inclusive range A..B")
            sp.add_argument("--n-range", dest="n_range", help="inclusive range A..B")
        else:
            sp.add_argument("--n", type=int)
        sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
        sp.add_argument("--out")

    sp = sub.add_parser("rho", help="certified spectral radius of graph6 input or a builtin")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--builtin", choices=sorted(BUILTINS))
    sp.add_argument("--format", choices=("csv", "md"), default="csv")
    common(sp, n_range=False)
    sp.set_defaults(func=cmd_rho)

    sp = sub.add_parser("bounds", help="lower/upper bounds with rho(H_n) between them")
    sp.add_argument("--format", choices=("csv", "md"), default="csv")
    common(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("suite")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="exhaustive dominating-family run into the cache")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--force", action="store_true")
    common(sp, n_range=False)
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, DomainError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PlanarSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
