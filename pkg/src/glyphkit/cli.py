"""Command-line front end.

Exit codes: 0 success, 1 domain negative (loop found, reproduction check
failed), 2 usage or parse error, 3 ligature step limit reached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from pathlib import Path

from . import __version__, data_path
from . import reproduce as repro
from .hyphenation import (
    Hyphenator,
    PatternParseError,
    build_trie,
    pack_trie,
    parse_exceptions,
    parse_fold_table,
    parse_patterns,
)
from .ligature import (
    LigatureParseError,
    StepLimitExceeded,
    Undefined,
    check_loops,
    f_table,
    f_table_json,
    format_letter,
    parse_program,
    simulate,
)
from .raster import (
    BINARY_FORMATS,
    FORMATS,
    Circle,
    PenError,
    Segment,
    UniformityReport,
    column_bounds,
    digitize,
    emit,
    make_pen,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_STEP_LIMIT = 0, 1, 2, 3

BUNDLED_PATTERNS = {"demo": "demo.pat", "en-us": "en-us.pat"}


class UsageError(Exception):
    pass


def _styled(text: str, color: str) -> str:
    if os.environ.get("GLYPHKIT_NO_COLOR") or not sys.stdout.isatty():
        return text
    code = {"green": "32", "red": "31"}[color]
    return f"\033[{code}m{text}\033[0m"


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _pattern_text(name: str) -> str:
    if not Path(name).exists() and name in BUNDLED_PATTERNS:
        return data_path(BUNDLED_PATTERNS[name]).read_text(encoding="utf-8")
    return _read_text(name)


def _point(text: str) -> tuple[float, float]:
    try:
        x, y = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y, got {text!r}") from None
    return x, y


def _bounds(text: str) -> tuple[int, int, int, int]:
    try:
        x0, y0, w, h = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X0,Y0,W,H, got {text!r}") from None
    return x0, y0, w, h


def _write_out(data: bytes, out: str | None, binary: bool, force: bool) -> None:
    if out:
        Path(out).write_bytes(data)
        return
    if binary and sys.stdout.isatty() and not force:
        raise UsageError("refusing to write a binary format to a terminal; use --out or --force")
    sys.stdout.buffer.write(data)
    if not binary and not data.endswith(b"\n"):
        sys.stdout.buffer.write(b"\n")
    sys.stdout.flush()


def cmd_hyphenate(args) -> int:
    if args.left_min < 1 or args.right_min < 1:
        raise UsageError("--left-min and --right-min must be at least 1")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        trie = build_trie(parse_patterns(_pattern_text(args.patterns)))
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    packed = pack_trie(trie)
    if args.stats:
        print(json.dumps(packed.stats()))
        return EXIT_OK
    fold = parse_fold_table(_read_text(args.fold)) if args.fold else None
    exceptions = parse_exceptions(_read_text(args.exceptions), fold) if args.exceptions else None
    hyph = Hyphenator(packed, exceptions, args.left_min, args.right_min, fold)
    words = args.words or sys.stdin.read().split()
    for word in words:
        print(hyph(word).marked(args.marker))
    return EXIT_OK


def _pair_text(pair) -> str:
    return f"({format_letter(pair[0])},{format_letter(pair[1])})"


def cmd_lig(args) -> int:
    program = parse_program(_read_text(args.rules))
    if args.action == "check":
        report = check_loops(program)
        if args.json:
            print(report.to_json())
        else:
            print(_styled(report.status, "green" if report.ok else "red"))
            for cycle in report.cycles:
                print(" -> ".join(_pair_text(p) for p in cycle))
        return EXIT_OK if report.ok else EXIT_NEGATIVE

    if args.action == "table":
        table = f_table(program)
        if args.json:
            print(f_table_json(table))
        else:
            for pair, value in sorted(table.items()):
                shown = "UNDEF" if isinstance(value, Undefined) else format_letter(value)
                print(f"{_pair_text(pair)} {shown}")
        return EXIT_OK

    if args.word is None:
        raise UsageError("lig apply needs a word")
    try:
        result = simulate(args.word, program, args.step_limit)
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STEP_LIMIT
    if args.json:
        doc = {
            "word": result.word,
            "steps": result.steps,
            "trace": [
                {"pair": list(s.pair), "op": s.op.name, "buffer": s.buffer, "focus": s.focus}
                for s in result.trace
            ],
        }
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(result.word)
    return EXIT_OK


def cmd_raster(args) -> int:
    pen = make_pen(args.pen_file) if args.pen_file else make_pen(args.pen)
    if args.shape == "line":
        if args.slope is not None:
            if args.cols is None or args.cols < 1:
                raise UsageError("--slope needs --cols N (N >= 1)")
            offset = args.offset or 0.0
            path = Segment((0.0, offset), (float(args.cols), offset + args.slope * args.cols))
            bounds = args.bounds or column_bounds(path, pen, 0, args.cols)
        elif args.start and args.end:
            if args.start == args.end:
                raise UsageError("--from and --to must differ")
            path = Segment(args.start, args.end)
            bounds = args.bounds
        else:
            raise UsageError("line needs --from/--to or --slope/--cols")
        center = None
    else:
        if args.radius is None or args.radius <= 0:
            raise UsageError("circle needs --radius R > 0")
        path = Circle(args.center, args.radius)
        bounds = args.bounds
        center = args.center

    try:
        grid = digitize(path, pen, bounds)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.metrics:
        if args.out:
            _write_out(emit(grid, args.format, center), args.out, False, True)
        print(UniformityReport.of(grid, center).to_json())
        return EXIT_OK
    _write_out(emit(grid, args.format, center), args.out, args.format in BINARY_FORMATS, args.force)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    outcomes = repro.run(args.figure, args.out_dir)
    for outcome in outcomes:
        for name, ok in outcome.checks:
            mark = _styled("PASS", "green") if ok else _styled("FAIL", "red")
            print(f"{mark} {outcome.figure}: {name}")
        for path in outcome.artifacts:
            print(f"  wrote {path}")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glyphkit",
        description="Pattern hyphenation, ligature loop checks and pen-stroke digitization.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hyphenate", help="mark permitted hyphens in words")
    p.add_argument("--patterns", required=True, help="pattern file, or bundled 'demo' / 'en-us'")
    p.add_argument("--exceptions", help="exception file with words like ta-ble")
    p.add_argument("--fold", help="case-folding table: lines of 'Upper lower'")
    p.add_argument("--left-min", type=int, default=2)
    p.add_argument("--right-min", type=int, default=3)
    p.add_argument("--marker", default="-")
    p.add_argument("--stats", action="store_true", help="print trie statistics as JSON")
    p.add_argument("words", nargs="*", help="words (default: read standard input)")
    p.set_defaults(func=cmd_hyphenate)

    p = sub.add_parser("lig", help="check, apply or tabulate a ligature program")
    p.add_argument("action", choices=("check", "apply", "table"))
    p.add_argument("rules")
    p.add_argument("word", nargs="?")
    p.add_argument("--step-limit", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lig)

    p = sub.add_parser("raster", help="digitize a pen stroke")
    p.add_argument("shape", choices=("line", "circle"))
    pen = p.add_mutually_exclusive_group()
    pen.add_argument("--pen", default="diamond", help="diamond, disk or octagon")
    pen.add_argument("--pen-file", help="vertex file: lines of 'x y'")
    p.add_argument("--from", dest="start", type=_point, metavar="X,Y")
    p.add_argument("--to", dest="end", type=_point, metavar="X,Y")
    p.add_argument("--slope", type=float)
    p.add_argument("--offset", type=float)
    p.add_argument("--cols", type=int)
    p.add_argument("--center", type=_point, default=(0.0, 0.0), metavar="X,Y")
    p.add_argument("--radius", type=float)
    p.add_argument("--bounds", type=_bounds, metavar="X0,Y0,W,H")
    p.add_argument("--format", choices=FORMATS, default="txt")
    p.add_argument("--out", help="output file (default: standard output)")
    p.add_argument("--force", action="store_true", help="allow binary output to a terminal")
    p.add_argument(
        "--metrics",
        action="store_true",
        help="print the uniformity report as JSON; the image is written only with --out",
    )
    p.set_defaults(func=cmd_raster)

    p = sub.add_parser("reproduce", help="regenerate a demonstration figure and check it")
    p.add_argument("figure", choices=(*repro.RECIPES, "all"))
    p.add_argument("--out-dir", default="glyphkit-figures")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PatternParseError, LigatureParseError, PenError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
