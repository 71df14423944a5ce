"""Command line front end.

Every subcommand reads the text formats of the library (``-`` is stdin) and
writes line-oriented output.  Exit status: 0 success, 1 domain error, 2 usage.
"""

import argparse
import os
import sys

from . import __version__, catalog
from .diagram import build_diagram, export_plot, format_gauss, format_pd, gauss_code, pd_code, writhe
from .errors import KnotError
from .invariants import CROSSING_CAP, colorings, determinant, format_laurent, jones
from .lattice import format_vertices, format_word, parse_knot, to_anchored_word
from .moves import (apply_m1, apply_move, enumerate_m2, format_certificate,
                    parse_certificate, parse_move)
from .search import SearchBudget, find_certificate, verify_certificate


class UsageError(Exception):
    pass


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path, stdin):
    try:
        return parse_knot(_read(path, stdin))
    except KnotError as exc:
        raise KnotError(f"{path}: {exc}") from exc


def _emit(k, fmt):
    return format_word(to_anchored_word(k)) if fmt == "word" else format_vertices(k)


def cmd_validate(args, out, stdin):
    k = _load(args.file, stdin)
    counts = k.axis_counts()
    out.write(f"valid {len(k)}\n")
    out.write("steps " + " ".join(f"{d.token}={c}" for d, c in counts.items()) + "\n")


def cmd_convert(args, out, stdin):
    out.write(_emit(_load(args.file, stdin), args.to))


def cmd_move(args, out, stdin):
    k = _load(args.file, stdin)
    if args.action == "list":
        for mv in enumerate_m2(k):
            out.write(f"{mv}\n")
        return
    if not args.move:
        raise UsageError("move apply needs a move, e.g. 'M2 1to3 0 Z+'")
    mv = parse_move(" ".join(args.move))
    out.write(_emit(apply_move(k, mv), args.to))


def cmd_subdivide(args, out, stdin):
    k = _load(args.file, stdin)
    out.write(_emit(apply_m1(k, args.m), args.to))


def _precision(args):
    if args.precision is not None:
        return args.precision
    env = os.environ.get("CUBEKNOT_PRECISION")
    return int(env) if env else 17


def cmd_project(args, out, stdin):
    d = build_diagram(_load(args.file, stdin))
    out.write(export_plot(d, _precision(args)))


def cmd_diagram(args, out, stdin):
    d = build_diagram(_load(args.file, stdin))
    if args.format == "gauss":
        out.write(format_gauss(gauss_code(d)) + "\n")
    else:
        out.write(format_pd(pd_code(d)))


def cmd_invariant(args, out, stdin):
    d = build_diagram(_load(args.file, stdin))
    which = args.which
    if which == "writhe":
        out.write(f"{writhe(d)}\n")
    elif which in ("color3", "colorP"):
        p = 3 if which == "color3" else args.p
        if p is None:
            raise UsageError("colorP needs -p")
        out.write(f"{colorings(d, p).count}\n")
    elif which == "det":
        out.write(f"{determinant(d)}\n")
    else:
        out.write(format_laurent(jones(d, cap=args.cap)) + "\n")


def _budget(args):
    box = tuple(args.box) if args.box else None
    factors = tuple(args.m1) if args.m1 else (2,)
    return SearchBudget(max_states=args.max_states, max_length=args.max_length,
                        bounding_box=box, allow_m1=bool(args.m1), m1_factors=factors,
                        oriented=args.oriented)


def cmd_equiv(args, out, stdin):
    k1 = _load(args.file1, stdin)
    k2 = _load(args.file2, stdin)
    result = find_certificate(k1, k2, _budget(args))
    if not result.found:
        for line in result.stats.lines():
            out.write(f"# {line}\n")
        raise KnotError("no certificate within budget (inconclusive)")
    out.write(format_certificate(result.certificate, result.stats.lines()))


def cmd_verify(args, out, stdin):
    k1 = _load(args.file1, stdin)
    cert = parse_certificate(_read(args.cert, stdin))
    k2 = _load(args.file2, stdin)
    if not verify_certificate(k1, cert, k2, oriented=args.oriented):
        raise KnotError("certificate does not carry the first knot to the second")
    out.write(f"ok {len(cert)} steps\n")


def cmd_catalog(args, out, stdin):
    if args.name is None:
        for name, entry in catalog.CATALOG.items():
            out.write(f"{name} {len(entry.knot)} {entry.note}\n")
        return
    try:
        k = catalog.get(args.name)
    except KeyError as exc:
        raise KnotError(str(exc.args[0])) from None
    out.write(_emit(k, args.to))


def build_parser():
    parser = argparse.ArgumentParser(prog="cubeknot", description="Cubic lattice knots.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt_flag(p):
        p.add_argument("--to", choices=("vertices", "word"), default="vertices")

    p = sub.add_parser("validate", help="check a knot file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert between vertex and word formats")
    p.add_argument("--to", choices=("vertices", "word"), required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("move", help="list or apply M1/M2 moves")
    p.add_argument("action", choices=("list", "apply"))
    p.add_argument("file")
    p.add_argument("move", nargs="*", help="e.g. M2 1to3 0 Z+")
    fmt_flag(p)
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("subdivide", help="apply M1")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("file")
    fmt_flag(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("project", help="export plot coordinates of the diagram")
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("diagram", help="Gauss or PD code")
    p.add_argument("--format", choices=("gauss", "pd"), default="gauss")
    p.add_argument("file")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("invariant", help="compute an invariant")
    p.add_argument("--which", choices=("writhe", "color3", "colorP", "det", "jones"), required=True)
    p.add_argument("-p", type=int, default=None)
    p.add_argument("--cap", type=int, default=CROSSING_CAP)
    p.add_argument("file")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("equiv", help="search for a move certificate")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--max-states", type=int, default=100_000)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--box", type=int, nargs=3, default=None, metavar=("DX", "DY", "DZ"))
    p.add_argument("--m1", type=int, nargs="+", default=None, help="allow M1 with these factors")
    p.add_argument("--oriented", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("verify", help="replay a certificate")
    p.add_argument("file1")
    p.add_argument("cert")
    p.add_argument("file2")
    p.add_argument("--oriented", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or print built-in knots")
    p.add_argument("name", nargs="?")
    fmt_flag(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, stdout, stdin)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except KnotError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())

