"""Command-line interface: ``treeseries <command> [options]``.

Series inputs are JSON documents or canonical text, given inline or as a file
path.  Exit status is 0 on success, 1 when a verification suite fails and 2
on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import trees as T
from .coeff import ParseError, value_to_json
from .hopf import COPRODUCT_NAMES, antipode, format_tensor, get_coproduct, tensor_to_json
from .operads import get_instance
from .series import (
    Carrier,
    GradedSeries,
    act,
    alpha_from,
    comp_inverse,
    compose,
    factor_under_rho,
    format_series,
    inv_monoid,
    mul_monoid,
    parse_series,
    project_order,
    section_comb,
    series_from_json,
    series_to_json,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# input handling ----------------------------------------------------------------

def read_source(arg: str) -> str:
    """Contents of ``arg`` if it names a file, else ``arg`` itself."""
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def parse_inputs(text: str, expected: str, carrier: Carrier | None = None,
                 truncation: int | None = None):
    """Parse a tree, a series or a character (a series read as a coefficient map).

    Text series take ``truncation`` when given, else their largest grading.
    """
    if expected == "tree":
        return T.parse_tree(text.strip())
    if expected in ("series", "character"):
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                s = series_from_json(stripped)
            except json.JSONDecodeError as exc:
                raise ParseError(exc.msg, stripped, exc.pos) from None
            if carrier is not None and s.carrier != carrier:
                raise ValueError(
                    f"carrier mismatch: expected {carrier.describe()}, got {s.carrier.describe()}"
                )
        else:
            if carrier is None:
                raise ValueError("text series need a carrier")
            s = parse_series(stripped, carrier, truncation)
        return s if expected == "series" else s.terms
    raise ValueError(f"expected must be 'tree', 'series' or 'character', got {expected!r}")


def _carrier(args, kind: str) -> Carrier:
    inst = get_instance(args.instance)
    return Carrier.monoid(inst, args.p2) if kind == "monoid" else Carrier.operad(inst)


def _series(args, attr: str, kind: str) -> GradedSeries:
    raw = getattr(args, attr)
    if raw is None:
        raise UsageError(f"--{attr} is required")
    text = read_source(raw)
    is_json = text.strip().startswith("{")
    s = parse_inputs(text, "series", None if is_json else _carrier(args, kind), args.max_order)
    if (kind == "monoid") != s.carrier.is_monoid:
        raise ValueError(f"--{attr}: expected a {kind} series, got {s.carrier.describe()}")
    if args.max_order is not None:
        s = s.truncate(min(args.max_order, s.truncation))
    return s


# output --------------------------------------------------------------------------

def _emit(args, text: str, payload) -> None:
    body = json.dumps(payload, indent=2) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _emit_series(args, s: GradedSeries) -> None:
    _emit(args, format_series(s), series_to_json(s))


# commands ------------------------------------------------------------------------

def cmd_trees(args) -> int:
    if args.order is None or args.order < 0:
        raise UsageError("--order must be a non-negative integer")
    codes = [t.code for t in T.enumerate_trees(args.order)]
    _emit(args, "\n".join(codes), codes)
    return EXIT_OK


def cmd_multiply(args) -> int:
    _emit_series(args, mul_monoid(_series(args, "lhs", "monoid"), _series(args, "rhs", "monoid")))
    return EXIT_OK


def cmd_invert(args) -> int:
    _emit_series(args, inv_monoid(_series(args, "input", "monoid")))
    return EXIT_OK


def cmd_compose(args) -> int:
    _emit_series(args, compose(_series(args, "lhs", "operad"), _series(args, "rhs", "operad")))
    return EXIT_OK


def cmd_comp_invert(args) -> int:
    _emit_series(args, comp_inverse(_series(args, "input", "operad")))
    return EXIT_OK


def cmd_act(args) -> int:
    _emit_series(args, act(_series(args, "lhs", "monoid"), _series(args, "rhs", "operad")))
    return EXIT_OK


def cmd_alpha(args) -> int:
    _emit_series(args, alpha_from(_series(args, "input", "monoid")))
    return EXIT_OK


def cmd_factor(args) -> int:
    psi, g = factor_under_rho(_series(args, "input", "operad"))
    text = f"psi: {format_series(psi)}\ng: {format_series(g)}"
    _emit(args, text, {"psi": series_to_json(psi), "g": series_to_json(g)})
    return EXIT_OK


def cmd_project(args) -> int:
    raw = args.input
    if raw is None:
        raise UsageError("--input is required")
    kind = "monoid" if args.p2 is not None else "operad"
    text = read_source(raw)
    s = parse_inputs(text, "series", None if text.strip().startswith("{") else _carrier(args, kind),
                     args.max_order)
    _emit_series(args, project_order(s))
    return EXIT_OK


def cmd_section(args) -> int:
    raw = args.input
    if raw is None:
        raise UsageError("--input is required")
    text = read_source(raw)
    carrier = None
    if not text.strip().startswith("{"):
        inst = get_instance("as")
        carrier = Carrier.monoid(inst) if args.kind == "inv" else Carrier.operad(inst)
    s = parse_inputs(text, "series", carrier, args.max_order)
    _emit_series(args, section_comb(s, args.side, args.kind))
    return EXIT_OK


def _generator(args, cop):
    if args.tree is None:
        raise UsageError("--tree is required")
    return cop.source.parse_generator(read_source(args.tree))


def cmd_coproduct(args) -> int:
    cop = get_coproduct(args.algebra, args.commutative)
    image = cop(_generator(args, cop))
    _emit(args, format_tensor(image), tensor_to_json(image))
    return EXIT_OK


def cmd_antipode(args) -> int:
    cop = get_coproduct(args.algebra, args.commutative)
    image = antipode(_generator(args, cop), cop)
    payload = [
        {"word": [cop.source.format_generator(g) for g in w], "q": value_to_json(c)}
        for (w,), c in image.items()
    ]
    _emit(args, format_tensor(image), payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suite(args.suite, N=args.max_order, seed=args.seed, trials=args.trials)
    failures = [r for r in results if not r.passed]
    n_label = "default" if args.max_order is None else args.max_order
    lines = [f"# suite={args.suite} seed={args.seed} N={n_label}"]
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} [{r.suite}] {r.name} ({r.seconds:.2f}s): {r.detail}")
    lines.append(f"# {len(results) - len(failures)} passed, {len(failures)} failed")
    payload = {
        "suite": args.suite, "seed": args.seed, "N": args.max_order,
        "results": [r.to_json() for r in results],
        "failures": [f"{r.suite}/{r.name}" for r in failures],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_FAIL if failures else EXIT_OK


COMMANDS = {
    "trees": (cmd_trees, "list the trees of a given order"),
    "compose": (cmd_compose, "operadic composition lhs o rhs"),
    "multiply": (cmd_multiply, "monoid product lhs . rhs"),
    "invert": (cmd_invert, "monoid inverse"),
    "comp-invert": (cmd_comp_invert, "compositional inverse"),
    "act": (cmd_act, "right action of an operad series (rhs) on a monoid series (lhs)"),
    "alpha": (cmd_alpha, "alpha-member built from a tree series"),
    "factor": (cmd_factor, "split a tree diffeomorphism as section(psi) o rho_g"),
    "coproduct": (cmd_coproduct, "coproduct or coaction of a generator"),
    "antipode": (cmd_antipode, "antipode of a generator"),
    "project": (cmd_project, "order projection onto integer series"),
    "section": (cmd_section, "comb section of an integer series"),
    "verify": (cmd_verify, "run verification suites"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treeseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("-o", "--output", help="write the result to this path")
        p.add_argument("-N", "--max-order", type=int, dest="max_order",
                       help="truncation (series commands) or size bound (verify)")
        if name == "trees":
            p.add_argument("--order", type=int, required=True)
        if name in ("compose", "multiply", "act"):
            p.add_argument("--lhs", help="series: inline text/JSON or a file path")
            p.add_argument("--rhs", help="series: inline text/JSON or a file path")
        if name in ("invert", "comp-invert", "alpha", "factor", "project", "section"):
            p.add_argument("--input", help="series: inline text/JSON or a file path")
        if name in ("compose", "multiply", "act", "invert", "comp-invert", "alpha", "factor", "project"):
            p.add_argument("--instance", choices=("dup", "as", "dias"), default="dup",
                           help="operad instance for text inputs")
            p.add_argument("--p2", help="associative element of the monoid (over/under for trees)")
        if name == "section":
            p.add_argument("--side", choices=("over", "under"), default="over")
            p.add_argument("--kind", choices=("inv", "dif"), default="dif")
        if name in ("coproduct", "antipode"):
            p.add_argument("--algebra", choices=COPRODUCT_NAMES, required=True)
            p.add_argument("--tree", help="generator: tree (code or expression), or a<n>/b<n>")
            p.add_argument("--commutative", action="store_true", help="use the commutative quotient")
        if name == "verify":
            p.add_argument("--suite", choices=SUITES + ("all",), default="all")
            p.add_argument("--seed", type=int, default=42)
            p.add_argument("--trials", type=int, help="number of random samples per check")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_order is not None and args.max_order < 0:
        parser.error("-N must be non-negative")
    if args.command in ("multiply", "invert", "act", "alpha") and args.p2 is None and args.instance == "dup":
        args.p2 = "over"
    handler = COMMANDS[args.command][0]
    try:
        return handler(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
