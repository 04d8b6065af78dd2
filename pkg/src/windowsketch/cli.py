"""Command-line front end.

    windowsketch count  -w 4 -e 1/4 -i stream.txt
    windowsketch sum    -w 256 -e 1/16 -r 1500 -i -
    windowsketch bounds -w 1024 -e 1/64
    windowsketch gen    --kind bernoulli --p 0.3 --length 1000 --seed 7

Exit codes: 0 success, 2 usage error, 3 unsupported parameter regime,
4 malformed or out-of-range input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bounds, streams
from .count_sketch import CountSketch
from .harness import evaluate, memory_report, report_dict, report_text
from .sum_sketch import SumSketch
from .validation import ParameterError, as_fraction

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REGIME = 3
EXIT_INPUT = 4


def _fraction_arg(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _int_list(text: str) -> list[int]:
    text = text.strip()
    try:
        if "," in text or " " in text:
            return [int(t) for t in text.replace(",", " ").split()]
        return [int(c) for c in text]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pattern {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="windowsketch", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_range: bool):
        p.add_argument("-w", "--window", type=_positive_int, required=True)
        p.add_argument("-e", "--epsilon", type=_fraction_arg, required=True,
                       help="decimal or exact fraction p/q")
        if need_range:
            p.add_argument("-r", "--range", type=_positive_int, required=True, dest="value_range")

    for name, need_range in (("count", False), ("sum", True)):
        p = sub.add_parser(name, help=f"run the {name}ing sketch over a stream")
        common(p, need_range)
        p.add_argument("-i", "--input", default="-", help="stream file, or - for stdin")
        p.add_argument("-q", "--query-every", type=_positive_int, default=1)
        p.add_argument("--clamp", action="store_true", help="clip estimates to [0, R*W]")
        p.add_argument("--report", choices=("json", "text"), default="json")

    p = sub.add_parser("bounds", help="print memory bounds for (W, epsilon[, R])")
    common(p, need_range=False)
    p.add_argument("-r", "--range", type=_positive_int, default=None, dest="value_range")
    p.add_argument("--report", choices=("json", "text"), default="json")

    p = sub.add_parser("gen", help="emit a stream, one integer per line")
    p.add_argument("--kind", choices=("bernoulli", "uniform", "blocks", "sumlang"), required=True)
    p.add_argument("--p", type=_fraction_arg, default=Fraction(1, 2))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=_positive_int, default=None)
    p.add_argument("--pattern", type=_int_list, default=None,
                   help="block bits (blocks) or letter indices (sumlang)")
    p.add_argument("-w", "--window", type=_positive_int, default=None)
    p.add_argument("-e", "--epsilon", type=_fraction_arg, default=None)
    p.add_argument("-r", "--range", type=_positive_int, default=1, dest="value_range")
    return parser


def _open_input(path: str):
    if path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _run_sketch(args, out) -> int:
    if args.command == "count":
        sketch = CountSketch(window=args.window, epsilon=args.epsilon)
    else:
        sketch = SumSketch(window=args.window, epsilon=args.epsilon, value_range=args.value_range)
    fh = _open_input(args.input)
    try:
        values = streams.parse_stream(fh, R=sketch.value_range)
        error = evaluate(sketch, values, query_every=args.query_every, clamp=args.clamp)
    finally:
        if fh is not sys.stdin:
            fh.close()
    data = report_dict(sketch, error, memory_report(sketch))
    data["clamp"] = args.clamp
    _emit(data, args.report, out)
    return EXIT_OK


def _run_bounds(args, out) -> int:
    W, eps = args.window, args.epsilon
    data = {"window": W, "epsilon": str(eps)}
    if eps <= Fraction(1, 4) and W >= 2:
        data["count_lower_bound"] = bounds.count_lower_bound(W, eps)
    data["block_language_bound"] = bounds.block_language_bound(W, eps)
    data["count_upper_theory"] = bounds.count_upper_theory(W, eps)
    if args.value_range is not None:
        data["range"] = args.value_range
        data["sum_lower_bound"] = bounds.sum_lower_bound(W, args.value_range, eps)
    data["sum_upper_theory"] = bounds.sum_upper_theory(W, eps)
    if eps <= Fraction(1, 2 * W):
        data["succinct_bound"] = bounds.succinct_bound(W, eps)
    _emit(data, args.report, out)
    return EXIT_OK


def _run_gen(args, out) -> int:
    rng = random.Random(args.seed)
    if args.kind in ("bernoulli", "uniform"):
        if args.length is None:
            raise _Usage("--length is required for random streams")
        if args.kind == "bernoulli":
            values = streams.gen_bernoulli(args.p, args.length, args.seed)
        else:
            values = streams.gen_uniform(args.value_range, args.length, args.seed)
    else:
        if args.window is None or args.epsilon is None:
            raise _Usage(f"--window and --epsilon are required for --kind {args.kind}")
        W, eps = args.window, args.epsilon
        if args.kind == "blocks":
            pattern = args.pattern
            if pattern is None:
                pattern = [rng.randint(0, 1) for _ in range(streams.block_count(W, eps))]
            values = streams.gen_block_language(W, eps, pattern)
        else:
            R = args.value_range
            letters = args.pattern
            if letters is None:
                count = streams.sum_letter_count(W, R, eps)
                letters = [rng.randrange(count) for _ in range(W)]
            values = streams.gen_sum_language(W, R, eps, letters)
        if args.length is not None:
            values = (values + [0] * args.length)[: args.length]
    out.write(streams.format_stream(values))
    return EXIT_OK


class _Usage(Exception):
    pass


def _emit(data: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
    else:
        out.write(report_text(data))


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command in ("count", "sum"):
            return _run_sketch(args, out)
        if args.command == "bounds":
            return _run_bounds(args, out)
        return _run_gen(args, out)
    except _Usage as exc:
        print(f"windowsketch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterError as exc:
        print(f"windowsketch: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except (ValueError, OSError) as exc:
        print(f"windowsketch: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
