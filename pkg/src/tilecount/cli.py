"""Command-line entry point.

Exit codes: 0 success, 1 verification or crosscheck failure, 2 usage,
unsupported shape or budget error. Data goes to stdout (or ``--out``),
diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from contextlib import contextmanager
from typing import Iterator, TextIO

from . import closed_form as cf
from . import crosscheck, tables
from .grid import BoardSpec, render_ascii
from .oracle import (
    DEFAULT_MAX_CELLS,
    BudgetExceeded,
    EnumerationConfig,
    StateSpaceTooLarge,
    count_exhaustive,
    count_profile_dp,
    enumerate_tilings,
)
from .recurrences import Family, FamilySpec, count_family, infer_family, parse_family, sequence

_VERBOSITY = 1


def _diag(msg: str, level: int = 1) -> None:
    if _VERBOSITY >= level:
        print(msg, file=sys.stderr)


METHODS = ("recurrence", "backtracking", "profile-dp", "closed-form", "kasteleyn")
FAMILY_HELP = ", ".join(f.value for f in Family) + " (square-tile and kplus1 need --k)"


class UsageError(Exception):
    """Maps to exit code 2."""


class UnsupportedFamily(UsageError):
    pass


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _family_for(rows: int, cols: int, tile: int, tatami: bool) -> tuple[FamilySpec, int] | None:
    """Match the board (or its transpose) to a solved family; returns (family, width)."""
    fam = infer_family(rows, tile, tatami)
    if fam is not None:
        return fam, cols
    if cols >= 1:
        fam = infer_family(cols, tile, tatami)
        if fam is not None:
            return fam, rows
    return None


_CLOSED_FORMS = {
    Family.DOMINO_2XM: (cf.closed_form_2xm, "2xm"),
    Family.DOMINO_3XM: (cf.closed_form_3xm, "3xm"),
    Family.DOMINO_4XM: (cf.closed_form_4xm, "4xm"),
}


def _count(args: argparse.Namespace) -> int:
    rows, cols, tile, tatami = args.rows, args.cols, args.tile, args.tatami
    board = BoardSpec(rows, cols)
    method = args.method
    matched = _family_for(rows, cols, tile, tatami)
    if method is None:
        method = "recurrence" if matched else "backtracking"
    _diag(f"engine: {method}")

    if method == "backtracking":
        cfg = EnumerationConfig(tile_len=tile, tatami_filter=tatami)
        return count_exhaustive(board, cfg, max_cells=args.max_cells, force=args.force)
    if tatami and method != "recurrence":
        raise UnsupportedFamily(f"method {method} does not handle the tatami restriction")
    if method == "profile-dp":
        return count_profile_dp(board, tile, max_rows=args.max_rows)
    if method == "kasteleyn":
        if tile != 2 or rows < 1 or cols < 1:
            raise UnsupportedFamily("kasteleyn needs dominoes (--tile 2) on a non-empty board")
        value = cf.kasteleyn_count(rows, cols)
        if value >= 2**53:
            _diag("warning: kasteleyn value exceeds double precision; result is approximate")
        return round(value)
    if matched is None:
        raise UnsupportedFamily(
            f"no {method} formula for {rows}x{cols} boards with 1x{tile} tiles"
            + (" under the tatami restriction" if tatami else "")
        )
    fam, width = matched
    if method == "recurrence":
        return count_family(fam, width)
    if fam.family not in _CLOSED_FORMS:
        raise UnsupportedFamily(f"no closed form for {fam}")
    fn, key = _CLOSED_FORMS[fam.family]
    if width > cf.EXACT_UP_TO[key]:
        _diag(f"warning: width {width} is past the closed form's exact range "
              f"({cf.EXACT_UP_TO[key]}); result is approximate")
    return round(fn(width))


def cmd_count(args: argparse.Namespace) -> int:
    value = _count(args)
    with _output(args.out) as out:
        print(value, file=out)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    board = BoardSpec(args.rows, args.cols)
    if not args.force and board.area > args.max_cells:
        raise BudgetExceeded(
            f"{board.area} cells is over the {args.max_cells}-cell budget"
        )
    cfg = EnumerationConfig(tile_len=args.tile, tatami_filter=args.tatami, limit=args.limit)
    found = list(enumerate_tilings(board, cfg))
    with _output(args.out) as out:
        print(len(found), file=out)
        if args.render:
            for t in found:
                print(file=out)
                print(render_ascii(t), file=out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    try:
        name = tables.canonical_name(args.name)
        fmt = tables.canonical_format(args.format)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.verify:
        report = tables.verify_table(name)
        with _output(args.out) as out:
            print(report, file=out)
        return 0 if report.ok else 1
    with _output(args.out) as out:
        out.write(tables.emit(tables.build_table(name), fmt))
    return 0


def cmd_crosscheck(args: argparse.Namespace) -> int:
    if args.max_cells < 1:
        raise UsageError("--max-cells must be at least 1")
    names = [n for n in (args.families or "").split(",") if n.strip()]
    try:
        families = crosscheck.select_families(names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = crosscheck.run(args.max_cells, families)
    with _output(args.out) as out:
        print(report.render(), file=out)
    return 0 if report.ok else 1


def cmd_sequence(args: argparse.Namespace) -> int:
    if args.upto < 0:
        raise UsageError("--upto must be >= 0")
    try:
        fam = parse_family(args.family, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    values = sequence(fam, args.upto)
    with _output(args.out) as out:
        if args.format == "bfile":
            for i, v in enumerate(values):
                print(f"{i} {v}", file=out)
        else:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["index", "value"])
            writer.writerows(enumerate(values))
            out.write(buf.getvalue())
    return 0


def _board_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--tile", type=int, default=2, help="tile length k (tiles are 1 x k)")
    p.add_argument("--tatami", action="store_true", help="count only tatami tilings")
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS,
                   help="search budget in cells (default %(default)s)")
    p.add_argument("--force", action="store_true", help="ignore the search budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tilecount", description="Exact counts of 1xk tilings of rectangles.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="also report timings")
    parser.add_argument("-q", "--quiet", action="count", default=0, help="suppress diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tilings of one board")
    _board_args(p)
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--max-rows", type=int, help="row cap for profile-dp")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list tilings in canonical order")
    _board_args(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--render", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="regenerate or verify a published table")
    p.add_argument("--name", required=True, help="general-kx1, kplus1, domino-4xm or tatami")
    p.add_argument("--format", default="csv", help="csv, json or md")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("crosscheck", help="check every engine against every other")
    p.add_argument("--max-cells", type=int, required=True)
    p.add_argument("--families", help=f"comma-separated subset of: {FAMILY_HELP}")
    p.add_argument("--out")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("sequence", help="export a family's counts")
    p.add_argument("--family", required=True, help=FAMILY_HELP)
    p.add_argument("--k", type=int, help="tile length for square-tile and kplus1")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--format", choices=("bfile", "csv"), default="bfile")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    global _VERBOSITY
    _VERBOSITY = 1 + args.verbose - args.quiet
    start = time.perf_counter()
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}; pass --force to run anyway", file=sys.stderr)
        return 2
    except (UsageError, StateSpaceTooLarge, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        _diag(f"elapsed: {time.perf_counter() - start:.3f}s", level=2)


if __name__ == "__main__":
    sys.exit(main())
