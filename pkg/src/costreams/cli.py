"""Command-line surface.

    costreams eval "<pipeline>" [--format lines|list]
                                [--depth-limit N] [--fuel N]
    costreams bits-demo
    costreams selftest [--seed N]

Exit codes: 0 ok, 2 pipeline parse/check error, 3 fuel or depth-limit
exhausted, 4 arithmetic/index range error.
"""

import argparse
import sys

from .errors import ArithmeticRangeError, FuelExhaustedError
from .pipeline import (LimitExceededError, PipelineSyntaxError,
                       parse_pipeline, run_pipeline)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_RANGE = 4


def _cmd_eval(args):
    try:
        expr = parse_pipeline(args.pipeline)
    except PipelineSyntaxError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    try:
        out = run_pipeline(expr, fmt=args.format,
                           depth_limit=args.depth_limit, fuel=args.fuel)
    except (FuelExhaustedError, LimitExceededError) as err:
        print(f"limit error: {err}", file=sys.stderr)
        return EXIT_LIMIT
    except (ArithmeticRangeError, IndexError) as err:
        print(f"range error: {err}", file=sys.stderr)
        return EXIT_RANGE
    if out:
        print(out)
    return EXIT_OK


def _cmd_bits_demo(args):
    """The repeated-bit search on #t #f #f #t #f followed by #t forever."""
    from .classical import infinite_bits
    from .streams import always, append_list, takes

    def bit_stream():
        return append_list([True, False, False, True, False], always(True))

    def show(xs):
        return "[" + ", ".join(str(x) for x in xs) + "]"

    print("fresh take 3  ->", show(takes(infinite_bits(bit_stream()), 3)))
    print("fresh take 5  ->", show(takes(infinite_bits(bit_stream()), 5)))
    shared = infinite_bits(bit_stream())
    print("shared take 5 ->", show(takes(shared, 5)))
    print("shared take 3 ->", show(takes(shared, 3)))
    return EXIT_OK


def _cmd_selftest(args):
    from . import selftest
    return EXIT_OK if selftest.run(seed=args.seed) else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="costreams",
        description="persistent streams, corecursion schemes, and "
                    "resumable stream search")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a pipeline expression")
    p_eval.add_argument("pipeline", help='e.g. "count-down 3 | take 6"')
    p_eval.add_argument("--format", choices=("lines", "list"),
                        default="lines")
    p_eval.add_argument("--depth-limit", type=int, default=100_000,
                        help="largest observer request (default 100000)")
    p_eval.add_argument("--fuel", type=int, default=1_000_000,
                        help="scan budget per observation for searching "
                             "stages (default 1000000)")
    p_eval.set_defaults(fn=_cmd_eval)

    p_demo = sub.add_parser(
        "bits-demo", help="run the repeated-bit search demo")
    p_demo.set_defaults(fn=_cmd_bits_demo)

    p_self = sub.add_parser(
        "selftest", help="run the built-in oracle suites")
    p_self.add_argument("--seed", type=int, default=20260809)
    p_self.set_defaults(fn=_cmd_selftest)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
