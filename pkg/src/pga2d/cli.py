"""Command-line entry point: run construction scripts, dump the product tables."""

from __future__ import annotations

import argparse
import sys

from .errors import EvaluationError, ParseError, RenderError
from .multivector import BLADE_NAMES, DEFAULT_TOL, cayley_table, dual_table
from .render import render_svg
from .script import evaluate, parse


def format_cayley_table() -> str:
    """Human-readable geometric product table, row blade times column blade."""
    names = BLADE_NAMES
    width = max(len(n) for n in names) + 1
    lines = ["# geometric product: row * column"]
    lines.append("".join(n.rjust(width + 1) for n in ("*",) + names))
    for i, row in enumerate(cayley_table()):
        cells = [names[i].rjust(width + 1)]
        for s, k in row:
            cell = "0" if s == 0 else ("-" if s < 0 else "") + names[k]
            cells.append(cell.rjust(width + 1))
        lines.append("".join(cells))
    return "\n".join(lines) + "\n"


def format_dual_table() -> str:
    """Human-readable duality assignments, blade -> signed complementary blade."""
    lines = ["# duality map: blade ^ dual(blade) = e012"]
    for i, (s, k) in enumerate(dual_table()):
        sign = "-" if s < 0 else ""
        lines.append(f"dual({BLADE_NAMES[i]}) = {sign}{BLADE_NAMES[k]}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="pga2d", description="Euclidean plane constructions in geometric algebra"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a construction script")
    run_p.add_argument("script", help="path to the script file")
    run_p.add_argument("--svg", metavar="PATH", help="render the final environment")
    run_p.add_argument("--tol", type=float, default=DEFAULT_TOL, metavar="EPS")

    sub.add_parser("tables", help="print the basis product and duality tables")

    args = parser.parse_args(argv)

    if args.command == "tables":
        sys.stdout.write(format_cayley_table())
        sys.stdout.write(format_dual_table())
        return 0

    try:
        with open(args.script, encoding="utf-8") as handle:
            source = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        program = parse(source)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        env, output = evaluate(program, tol=args.tol)
        sys.stdout.write(output)
        if args.svg:
            render_svg(env, args.svg, tol=args.tol)
    except (EvaluationError, RenderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
