"""
Command-line front end.

Usage:
    klpoly info --type A3
    klpoly poly P --type A3 --y "2" --x "2 1 3 2"
    klpoly poly IC --type A3 --y "" --yp "2" --xp "2" --x "2 1 3 2"
    klpoly scan --type B3 --checks duality,orthogonality --emit json --out b3.json
    klpoly cache fill --type A4 --cache-file a4.tsv

Exit codes: 0 clean, 1 usage/parse error, 2 Bruhat precondition failed,
3 violation of an asserted check, 4 group exceeds --max-elements.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .coxeter import DEFAULT_CAP, group_from_descriptor
from .errors import CapExceeded, KLError, NotComparable
from .klcore import KLCache
from .scan import CHECKS, records_to_csv, records_to_json, run_scan
from .xi import local_ic_poincare, richardson_poincare, xi_a

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VIOLATION, EXIT_CAP = 0, 1, 2, 3, 4

POLY_KINDS = ("P", "R", "Q", "Xi", "IC", "H")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_group_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--type", dest="gtype", help='group type, e.g. "A3", "B 4", "I2(7)"')
    src.add_argument("--matrix-file", help="Coxeter matrix file: n, then n rows of n integers")
    p.add_argument("--max-elements", type=int, default=DEFAULT_CAP, help="element cap (default %(default)s)")
    p.add_argument("--cache-file", help="tab-separated P/R/Q cache, loaded if present and saved on exit")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="klpoly", description="Kazhdan-Lusztig polynomials and interval Xi polynomials")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("info", help="order, longest element and length histogram")
    _add_group_args(p)
    p.add_argument("--emit", choices=("text", "json"), default="text")

    p = sub.add_parser("poly", help="print one polynomial")
    p.add_argument("kind", choices=POLY_KINDS)
    _add_group_args(p)
    p.add_argument("--y", default="", help="word for y (1-based generators, space separated)")
    p.add_argument("--x", default="", help="word for x")
    p.add_argument("--yp", help="word for y' (IC only)")
    p.add_argument("--xp", help="word for x' (IC only)")

    p = sub.add_parser("scan", help="check identities over all pairs")
    _add_group_args(p)
    p.add_argument("--checks", default=",".join(CHECKS), help="comma separated subset of: " + ", ".join(CHECKS))
    p.add_argument("--emit", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write records here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("cache", help="fill or validate an on-disk P/R/Q cache")
    p.add_argument("action", choices=("fill", "check"))
    _add_group_args(p)
    return parser


def _group(args):
    return group_from_descriptor(args.gtype, args.matrix_file, cap=args.max_elements)


def _cache(args, group):
    return KLCache(group, cache_file=args.cache_file)


def cmd_group_info(args, out) -> int:
    g = _group(args)
    info = {
        "group": g.name,
        "rank": g.rank,
        "order": g.size,
        "w0": g.canonical_word(g.w0),
        "max_length": g.max_length,
        "histogram": g.length_histogram(),
        "poincare": str(g.poincare_polynomial()),
        "crystallographic": g.is_crystallographic(),
    }
    if args.emit == "json":
        out.write(json.dumps(info) + "\n")
    else:
        for k, v in info.items():
            if k == "histogram":
                v = " ".join(map(str, v))
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def cmd_poly(args, out) -> int:
    g = _group(args)
    cache = _cache(args, g)
    y, x = g.parse_word(args.y), g.parse_word(args.x)
    kind = args.kind
    if kind == "IC":
        if args.yp is None or args.xp is None:
            raise _UsageError("IC needs --yp and --xp")
        val = local_ic_poincare(cache, y, x, g.parse_word(args.yp), g.parse_word(args.xp))
    elif kind in ("Xi", "H"):
        val = xi_a(cache, y, x) if kind == "Xi" else richardson_poincare(cache, y, x)
    else:
        val = {"P": cache.p_poly, "R": cache.r_poly, "Q": cache.q_poly}[kind](y, x)
    out.write(f"{val}\n")
    if args.cache_file:
        cache.save(args.cache_file)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    g = _group(args)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad or not checks:
        raise _UsageError(f"unknown checks: {', '.join(bad) or '(none given)'}")
    report = run_scan(g, checks, jobs=args.jobs, cap=args.max_elements)
    text = records_to_json(report.records) if args.emit == "json" else records_to_csv(report.records)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    sys.stderr.write(report.summary() + "\n")
    return EXIT_VIOLATION if report.failures else EXIT_OK


def cmd_cache(args, out) -> int:
    if not args.cache_file:
        raise _UsageError("cache commands need --cache-file")
    g = _group(args)
    cache = KLCache(g)
    path = Path(args.cache_file)
    if args.action == "check":
        n = cache.load(path)
        out.write(f"{path}: {n} valid records for {g.name}\n")
        return EXIT_OK
    if path.exists():
        cache.load(path)
    for y, x in g.bruhat_pairs():
        cache.p_poly(y, x)
        cache.r_poly(y, x)
        cache.q_poly(y, x)
    n = cache.save(path)
    out.write(f"{path}: wrote {n} records for {g.name}\n")
    return EXIT_OK


class _UsageError(Exception):
    pass


_COMMANDS = {"info": cmd_group_info, "poly": cmd_poly, "scan": cmd_scan, "cache": cmd_cache}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        sys.stderr.write(f"klpoly: {exc}\n")
        return EXIT_CAP
    except NotComparable as exc:
        sys.stderr.write(f"klpoly: {exc}\n")
        return EXIT_PRECONDITION
    except (_UsageError, KLError, OSError) as exc:
        sys.stderr.write(f"klpoly: {exc}\n")
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
