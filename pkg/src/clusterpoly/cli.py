"""Command line for polygon quivers, their module categories, cluster variables
and the verification suites.

Exit status is 0 on success, 1 when a verification suite finds a failure and
2 for usage errors (bad flags, unreadable or invalid triangulation files).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cluster.seeds import initial_seed
from .diagcat import hom_ext_table
from .formats import (ar_dot, ar_json, indec_rows, indec_text, quiver_dot, quiver_text,
                      variable_table, variable_text)
from .polygon import PolygonError, Triangulation, snake, triangulation_from_json
from .quiver import quiver_from_triangulation
from .repcat import ar_quiver
from .verify import SUITES, Report

RANK_CAP = 10
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

FORMATS = {
    "quiver": ("text", ("json", "dot", "text")),
    "indec": ("text", ("json", "text")),
    "ar": ("dot", ("json", "dot", "text")),
    "variables": ("json", ("json", "text")),
    "orbit": ("json", ("json", "text")),
    "verify": ("json", ("json", "text")),
}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterpoly", description=" ".join(__doc__.split("\n\n")[0].split()))
    sub = parser.add_subparsers(dest="command", required=True)
    for name in FORMATS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, help="rank; the polygon has n+3 vertices")
        p.add_argument("--triangulation", metavar="FILE",
                       help='JSON {"n": ..., "diagonals": [[a, b], ...]}; default is the snake')
        p.add_argument("--format", choices=("json", "dot", "text"))
        p.add_argument("--allow-large", action="store_true",
                       help=f"permit ranks above {RANK_CAP}")
        if name == "verify":
            p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, or all")
            p.add_argument("--walk", type=int, default=50, help="random walk length (laurent suite)")
            p.add_argument("--seed", type=int, default=0, help="random seed (laurent suite)")
    return parser


def _load_triangulation(args) -> Triangulation:
    if args.triangulation is None:
        if args.n is None:
            raise UsageError("--n is required when no --triangulation is given")
        T = None
    else:
        try:
            with open(args.triangulation) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read {args.triangulation}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.triangulation} is not JSON: {exc}") from None
        try:
            T = triangulation_from_json(data)
        except PolygonError as exc:
            raise UsageError(f"invalid triangulation: {exc}") from None
        if args.n is not None and args.n != T.n:
            raise UsageError(f"--n {args.n} does not match the triangulation rank {T.n}")
        args.n = T.n
    _check_rank(args)
    return snake(args.n) if T is None else T


def _check_rank(args) -> None:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError(f"rank must be at least 1, got {args.n}")
    if args.n > RANK_CAP and not args.allow_large:
        raise UsageError(f"rank {args.n} exceeds {RANK_CAP}; pass --allow-large to proceed")


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def run_verify(args) -> tuple[str, int]:
    if args.triangulation is not None:
        _load_triangulation(args)
    _check_rank(args)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name == "laurent":
            reports.append(SUITES[name](args.n, length=args.walk, seed=args.seed))
        else:
            reports.append(SUITES[name](args.n))
    if len(reports) == 1:
        combined = reports[0]
    else:
        combined = Report("all", args.n, sum(r.checked for r in reports),
                          [{"suite": r.suite, **f} for r in reports for f in r.failures])
    if args.format == "text":
        out = "".join(f"{r.suite}\tn={r.n}\tchecked={r.checked}\tfailures={len(r.failures)}\n"
                      for r in reports)
    else:
        out = _dump(combined.to_json())
    return out, EXIT_OK if combined.ok else EXIT_FAILED


def run(args) -> tuple[str, int]:
    default, allowed = FORMATS[args.command]
    args.format = args.format or default
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format}")
    if args.command == "verify":
        return run_verify(args)
    if args.command == "orbit":
        if args.triangulation is not None:
            _load_triangulation(args)
        _check_rank(args)
        table = hom_ext_table(args.n)
        if args.format == "text":
            return "".join("(%d,%d)\t(%d,%d)\thom=%d\text1=%d\n" % (*p["from"], *p["to"], p["hom"], p["ext1"])
                           for p in table["pairs"]), EXIT_OK
        return _dump(table), EXIT_OK

    T = _load_triangulation(args)
    if args.command == "quiver":
        Q = quiver_from_triangulation(T)
        render = {"json": lambda: _dump(Q.to_json()), "dot": lambda: quiver_dot(Q),
                  "text": lambda: quiver_text(Q)}
        return render[args.format](), EXIT_OK
    if args.command == "indec":
        rows = indec_rows(T)
        return (_dump(rows) if args.format == "json" else indec_text(rows)), EXIT_OK
    if args.command == "ar":
        ar = ar_quiver(T)
        if args.format == "dot":
            return ar_dot(ar), EXIT_OK
        if args.format == "json":
            return _dump(ar_json(ar)), EXIT_OK
        return "".join(f"{s} -> {t}\n" for s, t in sorted(ar.arrows)), EXIT_OK
    table = variable_table(initial_seed(T.n, T))
    return (_dump(table) if args.format == "json" else variable_text(table)), EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = run(args)
    except UsageError as exc:
        print(f"clusterpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
