"""Command line front end.

Exit codes: 0 success, 1 some identity check failed, 2 usage or input
error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import bijections as bij
from . import verifiers
from .caps import current
from .errors import CapExceeded, DomainError, PathSyntaxError
from .paths import (
    SignedSeq,
    enumerate_balanced,
    enumerate_dyck,
    enumerate_even_zeroed_balanced,
    enumerate_paths,
    parse_path,
)
from .render import render_decomposition, render_triangle
from .triangle import triangle

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

CSV_COLUMNS = ("identity", "n", "mode", "expected", "actual", "passed", "elapsed_ms")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(text), int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a < 0 or a > b:
        raise argparse.ArgumentTypeError(f"range {text!r} must satisfy 0 <= A <= B")
    return a, b


_SIGNED_ITEM = re.compile(r"^[+-]\([UD]*\)$")


def _merge_signed_inputs(argv: list[str]) -> list[str]:
    """Fold ``--input -(UD) +()`` into ``--input=-(UD) +()``.

    argparse would otherwise read a token starting with '-' as an option.
    """
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--input" and i + 1 < len(argv) and _SIGNED_ITEM.match(argv[i + 1]):
            j = i + 1
            while j < len(argv) and _SIGNED_ITEM.match(argv[j]):
                j += 1
            out.append("--input=" + " ".join(argv[i + 1 : j]))
            i = j
            continue
        out.append(tok)
        i += 1
    return out


def _path_token(text: str):
    # "()" is accepted as a readable spelling of the empty path
    return parse_path("" if text == "()" else text)


def _show(p) -> str:
    return p.steps or "()"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catconv", description="Lattice-path bijections and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--identity", required=True, choices=list(verifiers.IDENTITIES) + ["all"])
    where = v.add_mutually_exclusive_group(required=True)
    where.add_argument("--n", type=int)
    where.add_argument("--range", type=_range, metavar="A..B")
    v.add_argument("--mode", choices=verifiers.MODES, default="numeric")
    v.add_argument("--format", choices=("json", "csv", "table"), default="table")
    v.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("enumerate", help="list a path family")
    e.add_argument("--family", required=True, choices=("paths", "balanced", "dyck", "even-zeroed"))
    e.add_argument("--n", type=int, required=True,
                   help="length for paths, parameter for balanced/dyck, half the parameter for even-zeroed")
    e.add_argument("--limit", type=int)

    d = sub.add_parser("decompose", help="apply a bijection (or its inverse)")
    d.add_argument("--map", required=True, choices=("chi", "psi", "theorem9"))
    d.add_argument("--input", required=True, nargs="+")
    d.add_argument("--invert", action="store_true")

    t = sub.add_parser("triangle", help="print the even-zeroed counting grid")
    t.add_argument("--rows", type=int, required=True, help="N; the grid runs through column 4N")
    t.add_argument("--format", choices=("table", "json"), default="table")

    r = sub.add_parser("render", help="write an SVG picture")
    r.add_argument("--what", required=True, choices=("decomposition", "triangle"))
    r.add_argument("--input", help="UD-string for decomposition")
    r.add_argument("--map", choices=("chi", "psi"), default="chi")
    r.add_argument("--rows", type=int, default=1)
    r.add_argument("--omit-forbidden", action="store_true")
    r.add_argument("--out", default="-", help="output file, '-' for stdout")
    return parser


def _cmd_verify(args, out) -> int:
    lo, hi = (args.n, args.n) if args.range is None else args.range
    if lo < 0:
        raise DomainError("index must be nonnegative", str(lo))
    if args.identity == "all":
        jobs = []
        for ident in verifiers.IDENTITIES:
            if args.mode not in verifiers.supported_modes(ident):
                continue
            a = max(lo, 1) if ident == "cor10" else lo
            if a <= hi:
                jobs.append((ident, a, hi))
    else:
        jobs = [(args.identity, lo, hi)]
    # validate everything before computing anything
    for ident, a, b in jobs:
        for n in range(a, b + 1):
            verifiers.check_request(ident, n, args.mode)
    reports = []
    for ident, a, b in jobs:
        reports += verifiers.verify_range(ident, a, b, args.mode, workers=args.workers)

    if args.format == "json":
        json.dump([r.to_json() for r in reports], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in reports:
            row = r.to_json()
            w.writerow([row[c] if c != "passed" else str(row[c]).lower() for c in CSV_COLUMNS])
    else:
        out.write(f"{'identity':<18} {'n':>3} {'mode':<10} {'result':<6} {'expected':>24} {'actual':>24}\n")
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            out.write(f"{r.identity:<18} {r.n:>3} {r.mode:<10} {status:<6} {r.expected:>24} {r.actual:>24}\n")
            for line in r.witness or ():
                out.write(f"    {line}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_enumerate(args, out) -> int:
    limits = current()
    if args.n < 0:
        raise DomainError("n must be nonnegative", str(args.n))
    if args.family == "paths":
        stream = enumerate_paths(args.n, limits.paths_length)
    elif args.family == "balanced":
        stream = enumerate_balanced(args.n, limits.paths_parameter)
    elif args.family == "dyck":
        stream = enumerate_dyck(args.n, limits.paths_parameter)
    else:
        stream = enumerate_even_zeroed_balanced(args.n, limits.paths_parameter)
    for i, p in enumerate(stream):
        if args.limit is not None and i >= args.limit:
            break
        out.write(p.steps + "\n")
    return EXIT_OK


def _cmd_decompose(args, out) -> int:
    if args.map == "theorem9":
        if len(args.input) != 2:
            raise UsageError("theorem9 takes exactly two paths (use () for the empty path)")
        first, second = (_path_token(tok) for tok in args.input)
        if args.invert:
            e = bij.theorem9_backward(bij.PairO(first, second))
            out.write(f"{_show(e.first)} {_show(e.second)}\n")
        else:
            o = bij.theorem9_forward(bij.PairE(first, second))
            out.write(f"{_show(o.first)} {_show(o.second)}\n")
        return EXIT_OK
    if args.invert:
        seq = SignedSeq.parse(" ".join(args.input))
        p = bij.chi_inv(seq) if args.map == "chi" else bij.psi_inv(seq)
        out.write(p.steps + "\n")
        return EXIT_OK
    for tok in args.input:
        p = _path_token(tok)
        seq = bij.chi(p) if args.map == "chi" else bij.psi(p)
        out.write(f"{seq}\n")
    return EXIT_OK


def _cmd_triangle(args, out) -> int:
    if args.rows < 0:
        raise DomainError("rows must be nonnegative", str(args.rows))
    g = triangle(args.rows)
    if args.format == "json":
        json.dump(g.to_json(), out, indent=2)
        out.write("\n")
        return EXIT_OK
    for row in g.to_json()["rows"]:
        cells = " ".join(f"{h}:{v}" for h, v in row["labels"].items())
        out.write(f"t={row['t']:<3} {cells}\n")
    return EXIT_OK


def _cmd_render(args, out) -> int:
    if args.what == "decomposition":
        if args.input is None:
            raise UsageError("render --what decomposition needs --input")
        svg = render_decomposition(_path_token(args.input), args.map)
    else:
        if args.rows < 0:
            raise DomainError("rows must be nonnegative", str(args.rows))
        svg = render_triangle(args.rows, omit_forbidden=args.omit_forbidden)
    if args.out == "-":
        out.write(svg)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "decompose": _cmd_decompose,
    "triangle": _cmd_triangle,
    "render": _cmd_render,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        argv = sys.argv[1:] if argv is None else list(argv)
        args = build_parser().parse_args(_merge_signed_inputs(argv))
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (PathSyntaxError, DomainError) as exc:
        err.write(f"catconv: error: {exc}\n")
        return EXIT_USAGE
    except (CapExceeded, OverflowError, MemoryError) as exc:
        err.write(f"catconv: cap exceeded: {exc}\n")
        return EXIT_CAP
    except ValueError as exc:
        # malformed CATCONV_CAPS and similar
        err.write(f"catconv: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
