"""Command-line entry point: ``solve``, ``gen`` and ``bench``."""

from __future__ import annotations

import argparse
import sys

from .bench import KIND_PARAMS, REPORT_FIELDS, GeneratorSpec, InvalidSpec, generate_graph, run_benchmark
from .solver import solve
from .textio import ParseError, format_edge_list, format_partition, parse_edge_list

EXIT_PARSE = 2
EXIT_IO = 3
EXIT_SPEC = 4


def run_solve_command(input_path: str, output_path: str) -> int:
    try:
        with open(input_path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: IOError: cannot read {input_path}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    try:
        g = parse_edge_list(text)
    except ParseError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = format_partition(solve(g))
    try:
        with open(output_path, "w", newline="") as fh:
            fh.write(out)
    except OSError as exc:
        print(f"error: IOError: cannot write {output_path}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return 0


def _spec(args: argparse.Namespace) -> GeneratorSpec:
    return GeneratorSpec.from_params(args.kind, args.params, seed=args.seed)


def _gen(args: argparse.Namespace) -> int:
    text = format_edge_list(generate_graph(_spec(args)))
    if args.output == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: IOError: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return 0


def _bench(args: argparse.Namespace) -> int:
    records = run_benchmark(_spec(args), args.reps)
    if args.header:
        print("\t".join(REPORT_FIELDS))
    for rec in records:
        print(rec.report_line(), flush=True)
    return 0


def build_parser() -> argparse.ArgumentParser:
    kinds_help = "; ".join(f"{k} {' '.join(p)}" for k, p in KIND_PARAMS.items())
    parser = argparse.ArgumentParser(prog="scclevel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute SCCs of an edge-list file")
    p.add_argument("input")
    p.add_argument("output")

    for name, helptext in (("gen", "write a generated graph as an edge list"),
                           ("bench", "solve generated graphs with operation counters")):
        p = sub.add_parser(name, help=helptext, epilog=f"kinds: {kinds_help}")
        p.add_argument("kind", choices=sorted(KIND_PARAMS))
        p.add_argument("params", nargs="*", type=int)
        p.add_argument("--seed", type=int, default=0)
        if name == "gen":
            p.add_argument("-o", "--output", default="-")
        else:
            p.add_argument("--reps", type=int, default=1)
            p.add_argument("--header", action="store_true", help="print a column header line first")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "solve":
        return run_solve_command(args.input, args.output)
    try:
        return _gen(args) if args.command == "gen" else _bench(args)
    except InvalidSpec as exc:
        print(f"error: InvalidSpec: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
