"""
The `qeuler` command line.

Results go to stdout and are byte-stable; logging goes to stderr. Exit codes:
0 success or pass, 1 verification failure, 2 usage, parse or domain error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

from cli import emit
from combinatorics.eulerian import (EulerianTable, default_table, diff_polynomials, en_brute, en_recur,
                                    en_star_brute, en_star_recur, golden_en)
from combinatorics.partitions import build_table, count_T
from combinatorics.perm_core import Permutation, descents, disparity, weight, weight_trace
from combinatorics.poly import render, to_lines
from combinatorics.stabilization import wd_prefix
from core import cache, database
from core.config import config
from core.engine import VerificationEngine
from core.errors import EnumerationCeilingError, QEulerError
from core.reports import ERROR, PASS

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# --- Commands ---

def cmd_weight(args: argparse.Namespace, out: TextIO) -> int:
    perm = Permutation.parse(args.perm)
    if not perm.is_canonical:
        log.warning(f"{perm} is not a permutation of 1..{perm.n}; using its flattening")
    out.write(f"permutation: {perm}\n")
    out.write(f"descents: {descents(perm)}\n")
    out.write(f"weight: {weight(perm, shortcut=args.shortcut)}\n")
    out.write(f"disparity: {disparity(perm)}\n" if perm.n else "")
    if not args.no_trace:
        out.write("trace:\n")
        for step in weight_trace(perm):
            out.write(f"  {step.render()}\n")
    return EXIT_OK


def _write_polynomial(poly, fmt: str, out: TextIO):
    if fmt == "csv":
        out.write(emit.polynomial_csv(poly))
    elif fmt == "lines":
        out.write(to_lines(poly))
    else:
        out.write(render(poly) + "\n")


def cmd_en(args: argparse.Namespace, out: TextIO) -> int:
    n = args.n
    jobs = args.jobs
    if args.golden:
        brute = None
        if n <= config.enumeration_ceiling:
            brute = en_brute(n, jobs=jobs)
        else:
            log.warning(f"E_{n} is above the enumeration ceiling; the diff has no brute-force column")
        printed = golden_en(n)
        rows = diff_polynomials(brute, en_recur(n), printed.polynomial)
        for note in printed.parse_notes:
            out.write(f"# {note}\n")
        out.write(emit.diff_text(rows, ["brute", "recurrence", "printed"]))
        if not rows:
            out.write(f"# E_{n}: no differences\n")
        return EXIT_OK

    brute_fn, recur_fn = (en_star_brute, en_star_recur) if args.star else (en_brute, en_recur)
    if args.method == "both":
        rows = diff_polynomials(brute_fn(n, jobs=jobs), recur_fn(n))
        out.write(emit.diff_text(rows, ["brute", "recurrence"]))
        if rows:
            log.error(f"Brute force and recurrence disagree on {len(rows)} terms of E_{n}")
            return EXIT_FAILED
        log.info(f"E_{n}: brute force and recurrence agree")
        return EXIT_OK

    poly = brute_fn(n, jobs=jobs) if args.method == "brute" else recur_fn(n)
    _write_polynomial(poly, args.format, out)
    return EXIT_OK


def cmd_wd(args: argparse.Namespace, out: TextIO) -> int:
    prefix = wd_prefix(args.d, args.terms)
    if args.format in ("text", "both"):
        out.write(f"W_{args.d}(t) = {prefix.render()}\n")
    if args.format == "both":
        out.write(prefix.to_csv() + "\n")
    if args.format == "csv":
        out.write(emit.series_csv(prefix))
    return EXIT_OK


def cmd_tnk(args: argparse.Namespace, out: TextIO) -> int:
    if args.table is None:
        if args.n is None or args.k is None:
            raise argparse.ArgumentTypeError("tnk needs --n and --k, or --table N")
        out.write(f"{count_T(args.n, args.k)}\n")
        return EXIT_OK
    table = build_table(args.table)
    if args.format == "csv":
        out.write(emit.triangle_csv(table))
    elif args.format == "bfile":
        out.write(emit.triangle_bfile(table))
    else:
        out.write(emit.triangle_text(table, mark_bold=args.bold))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    report = args.engine.run(args.suite, record=args.record, max_n=args.max_n, max_k=args.max_k,
                             max_d=args.max_d, jobs=args.jobs)
    out.write(report.render_csv() if args.format == "csv" else report.render_text())
    if report.status == PASS:
        return EXIT_OK
    return EXIT_USAGE if report.status == ERROR else EXIT_FAILED


def cmd_cache(args: argparse.Namespace, out: TextIO) -> int:
    path = Path(args.path) if args.path else config.cache_path
    if args.action == "load":
        table = cache.cache_load(path, EulerianTable())
        out.write(f"{path}: E_n for n in {table.ns()}\n")
    else:
        en_recur(args.max_n)
        cache.cache_save(path, default_table)
        out.write(f"{path}: saved E_n for n in {default_table.ns()}\n")
    return EXIT_OK


def cmd_history(args: argparse.Namespace, out: TextIO) -> int:
    database.create_db_and_tables()
    if args.run is not None:
        violations = database.list_violations(args.run)
        out.write(emit.history_text(violations, ["check", "coordinates", "expected", "actual"])
                  if violations else f"run {args.run}: no violations recorded\n")
        return EXIT_OK
    out.write(emit.history_text(database.list_runs(args.suite, args.limit)))
    return EXIT_OK


# --- Parser ---

def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser(suite_names: Optional[List[str]] = None) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qeuler", description="q-Eulerian polynomials: compute and verify.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument("--cache", metavar="PATH", help="preload E_n from a coefficient cache file")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("weight", help="weight, descents and the split trace of a permutation")
    p.add_argument("perm", help='e.g. "781659243" or "10,2,1,3,..."')
    p.add_argument("--shortcut", action="store_true", help="use w(1 pi) = w(pi) + des(pi)")
    p.add_argument("--no-trace", action="store_true")
    p.set_defaults(func=cmd_weight)

    p = commands.add_parser("en", help="print E_n(x, q)")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--method", choices=["brute", "recur", "both"], default="recur")
    p.add_argument("--format", choices=["text", "csv", "lines"], default="text")
    p.add_argument("--star", action="store_true", help="E*_n: permutations ending in 1")
    p.add_argument("--golden", action="store_true", help="diff against the printed E_n (n <= 10)")
    p.add_argument("--jobs", type=_nonnegative, default=None, help="enumeration worker processes")
    p.set_defaults(func=cmd_en)

    p = commands.add_parser("wd", help="prefix of the stabilized series W_d(t)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=_nonnegative, default=5)
    p.add_argument("--format", choices=["text", "csv", "both"], default="both")
    p.set_defaults(func=cmd_wd)

    p = commands.add_parser("tnk", help="two-type partition numbers T(n, k)")
    p.add_argument("--n", type=_nonnegative)
    p.add_argument("--k", type=_nonnegative)
    p.add_argument("--table", type=_nonnegative, metavar="N", help="the triangle for n <= N")
    p.add_argument("--format", choices=["text", "csv", "bfile"], default="text")
    p.add_argument("--bold", action="store_true", help="mark the cells equal to W_d coefficients with *")
    p.set_defaults(func=cmd_tnk)

    p = commands.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=suite_names)
    p.add_argument("--max-n", type=_nonnegative)
    p.add_argument("--max-k", type=_nonnegative)
    p.add_argument("--max-d", type=_nonnegative)
    p.add_argument("--jobs", type=_nonnegative)
    p.add_argument("--record", action="store_true", help="store the report in the run ledger")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser("cache", help="load or save the coefficient cache")
    p.add_argument("action", choices=["load", "save"])
    p.add_argument("--path", help="defaults to $QEULER_CACHE or the configured cache.path")
    p.add_argument("--max-n", type=_nonnegative, default=12, help="save: compute E_n up to this n first")
    p.set_defaults(func=cmd_cache)

    p = commands.add_parser("history", help="recorded verification runs, newest first")
    p.add_argument("--suite")
    p.add_argument("--limit", type=_nonnegative, default=20)
    p.add_argument("--run", type=int, help="list the violations of one run")
    p.set_defaults(func=cmd_history)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    engine = VerificationEngine()
    parser = build_parser(engine.names())
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    args.engine = engine

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    try:
        if args.cache:
            cache.cache_load(args.cache, default_table)
        return args.func(args, out)
    except EnumerationCeilingError as e:
        print(f"qeuler: refused: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (QEulerError, argparse.ArgumentTypeError, FileNotFoundError) as e:
        print(f"qeuler: error: {e}", file=sys.stderr)
        return EXIT_USAGE
