"""Command-line interface: ``motzkin-plateaus {table,series,verify,bfile}``.

Exit codes: 0 success, 1 verification or engine failure, 2 usage error.
"""

import argparse
import sys

from . import contfrac, engines, paths
from .diagonals import diagonal_gf
from .errors import MotzkinError
from .paths import StatisticSpec, oracle_series
from .series import XSeries
from .tables import PlateauTable, table_from_recursion
from .verify import SUITES, Sizes, run_suite

ENGINES = ("recursion", "explicit", "oracle")
FORMATS = ("tsv", "csv", "pretty")
SERIES = ("f0", "g", "column", "peakfree", "oddheight", "uhd-uhhd", "mixed-height", "diagonal")
BFILES = ("a114583", "a114584", "a097860-triangle", "peakfree")


class UsageError(Exception):
    pass


def build_table(r, nmax, engine, cap=paths.DEFAULT_CAP):
    if engine == "recursion":
        return table_from_recursion(r, nmax)
    if engine == "explicit":
        return PlateauTable.from_series(engines.explicit_gf(r, nmax), r)
    return PlateauTable.from_series(oracle_series(StatisticSpec.plateau(r), nmax, cap), r)


def format_table(table, fmt):
    width = table.nmax // (table.r + 2) + 1
    if fmt in ("tsv", "csv"):
        sep = "\t" if fmt == "tsv" else ","
        lines = []
        for row in table.rows():
            # trailing empty cells keep every line the same width
            cells = [str(v) for v in row] + [""] * (width - len(row))
            lines.append(sep.join(cells))
        return "\n".join(lines)

    # pretty: the layout of the published table
    cells = [[str(v) for v in row] for row in table.rows()]
    colw = [max([len(str(p))] + [len(c[p]) for c in cells if p < len(c)]) for p in range(width)]
    label = max(len(f"n: {table.nmax}"), len("p:"))
    head = " " * label + " | " + " ".join(
        (f"p: {p}" if p == 0 else str(p)).rjust(colw[p] + (3 if p == 0 else 0)) for p in range(width)
    )
    lines = [head.rstrip(), "-" * label + "-+-" + "-" * (len(head) - label - 3)]
    for n, row in enumerate(cells):
        name = f"n: {n}" if n == 0 else str(n)
        body = " ".join(
            (row[p] if p < len(row) else "").rjust(colw[p] + (3 if p == 0 else 0)) for p in range(width)
        )
        lines.append((name.rjust(label) + " | " + body).rstrip())
    return "\n".join(lines)


def render_series(args):
    name, N = args.name, args.order
    if name == "f0":
        return str(engines.f0_closed(args.r, N))
    if name == "g":
        return str(engines.explicit_gf(args.r, N))
    if name == "column":
        return str(engines.column_gf(args.r, args.p, N))
    if name == "peakfree":
        return str(contfrac.peakfree_gf(N))
    if name == "oddheight":
        return str(contfrac.oddheight_gf(N))
    if name == "uhd-uhhd":
        return str(contfrac.uhd_uhhd_gf(N))
    if name == "mixed-height":
        return str(contfrac.mixed_height_gf(N))
    d = diagonal_gf(args.k, N)
    if args.rational:
        return str(d)
    return XSeries(d.expand(N), N).render("z")


def bfile_values(sequence, count):
    if sequence == "a114584":
        return engines.f0_closed(1, max(count - 1, 0)).integers()[:count]
    if sequence == "peakfree":
        return contfrac.peakfree_gf(max(count - 1, 0)).integers()[:count]
    values, nmax = [], 0
    while len(values) < count:
        nmax = max(2 * nmax, 8)
        if sequence == "a114583":
            table = table_from_recursion(1, nmax)
        else:
            table = PlateauTable.from_series(engines.explicit_gf(0, nmax), 0)
        values = table.flatten()
    return values[:count]


def cmd_table(args, out):
    if args.r < (0 if args.engine != "recursion" else 1):
        raise UsageError("--r must be >= 1 for the recursion engine and >= 0 otherwise")
    if args.nmax < 0:
        raise UsageError("--nmax must be nonnegative")
    if args.engine == "oracle" and args.nmax > args.cap:
        raise UsageError(f"--nmax {args.nmax} exceeds the oracle cap {args.cap} (raise --cap)")
    table = build_table(args.r, args.nmax, args.engine, args.cap)
    print(format_table(table, args.format), file=out)
    return 0


def cmd_series(args, out):
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    if args.r is None:
        args.r = 1
    if args.r < (1 if args.name == "column" else 0):
        raise UsageError(f"--r {args.r} is out of range for {args.name}")
    if args.name == "column" and (args.p is None or args.p < 0):
        raise UsageError("column needs --p >= 0")
    if args.name == "diagonal" and (args.k is None or args.k < 0):
        raise UsageError("diagonal needs --k >= 0")
    print(render_series(args), file=out)
    return 0


def cmd_verify(args, out):
    sizes = Sizes(order=args.order, nmax=args.nmax)
    if args.order is not None and args.order < 4:
        raise UsageError("--order must be at least 4")
    if args.nmax < 0 or args.nmax > paths.DEFAULT_CAP:
        raise UsageError(f"--nmax must be between 0 and {paths.DEFAULT_CAP}")
    results = run_suite(args.suite, sizes)
    for res in results:
        print(res.line(), file=out)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    return 1 if failed else 0


def cmd_bfile(args, out):
    if args.count < 0:
        raise UsageError("--count must be nonnegative")
    for i, v in enumerate(bfile_values(args.sequence, args.count)):
        print(f"{i} {v}", file=out)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="motzkin-plateaus",
        description="Plateau statistics of Motzkin paths: tables, series, checks and b-files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the c[n][p] triangle")
    p.add_argument("--r", type=int, default=1, help="plateau length (default 1)")
    p.add_argument("--nmax", type=int, default=14)
    p.add_argument("--engine", choices=ENGINES, default="recursion")
    p.add_argument("--format", choices=FORMATS, default="tsv")
    p.add_argument("--cap", type=int, default=paths.DEFAULT_CAP, help="oracle enumeration cap")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", help="print a generating function to a given order")
    p.add_argument("name", choices=SERIES)
    p.add_argument("--r", type=int, default=None, help="plateau length for f0/g/column")
    p.add_argument("--p", type=int, default=None, help="column index for column")
    p.add_argument("--k", type=int, default=None, help="diagonal index for diagonal")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--rational", action="store_true", help="diagonal: print N_k/(1-z)^(k+1)")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run cross-validation suites")
    p.add_argument("suite", nargs="?", choices=("all",) + SUITES, default="all")
    p.add_argument("--order", type=int, default=None, help="series order for residual/contfrac checks")
    p.add_argument("--nmax", type=int, default=14, help="table and oracle size")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bfile", help="export a sequence in OEIS b-file format")
    p.add_argument("sequence", choices=BFILES)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_bfile)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except MotzkinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
