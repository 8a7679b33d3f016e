"""Command-line interface: ``incidence-coloring <subcommand> ...``.

Graphs travel as edge-list text, colorings and reports as JSON.  Input comes
from standard input unless ``--in`` is given; output goes to standard output
unless ``--out`` is given.

Exit codes: 0 success / valid, 1 invalid coloring, 2 unsupported graph class,
3 bad input, 4 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import latin as latin_mod
from .coloring import IncidenceColoring, coloring_from_doc
from .dispatch import color
from .errors import (BudgetExceeded, ColoringMismatchError, GraphFormatError, LatinSquareError,
                     UnsupportedGraphError)
from .graph import GENERATORS, Graph, dump_graph, generate, load_graph
from .oracle import DEFAULT_BUDGET, SearchStats, exact_defective_chromatic
from .outerplanar import reducibility_inspection
from .verify import check_conditional, check_defective, defect_of

EXIT_OK, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_BAD_INPUT, EXIT_BUDGET = 0, 1, 2, 3, 4

RANDOM_KINDS = {"random_tree", "random_maximal_outerplanar", "random_outerplanar"}


class BadInput(Exception):
    pass


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise BadInput(f"cannot write {path}: {exc.strerror}") from None


def _json(doc) -> str:
    return json.dumps(doc, indent=None, separators=(",", ":"))


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_color(args) -> int:
    g = load_graph(_read(args.inp))
    result = color(g, args.d)
    doc = result.to_doc(one_based=args.one_based)
    if result.notes:
        doc["notes"] = result.notes
    _write(args.out, _json(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        doc = json.loads(_read(args.inp))
    except json.JSONDecodeError as exc:
        raise BadInput(f"coloring is not valid JSON: {exc}") from None
    g = load_graph(_read(args.graph)) if args.graph else None
    coloring = coloring_from_doc(doc, g)
    g = coloring.graph
    if args.conditional is not None:
        if coloring.k < args.conditional:       # colours 0..k-1 also lie in the larger palette
            coloring = IncidenceColoring(g, args.conditional, coloring.colors)
        report = check_conditional(g, coloring, args.conditional)
        out = {"mode": "conditional", "big_delta": args.conditional, **report.to_doc()}
    else:
        report = check_defective(g, coloring, args.d)
        out = {"mode": "defective", "d": args.d, "defect": defect_of(g, coloring), **report.to_doc()}
    _write(args.out, _json(out))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_chromatic(args) -> int:
    g = load_graph(_read(args.inp))
    totals = SearchStats()
    value = exact_defective_chromatic(g, args.d, args.kmax, args.budget, totals)
    _write(args.out, _json({"d": args.d, "k_max": args.kmax, "value": value, "stats": totals.to_doc()}))
    return EXIT_OK


def cmd_latin(args) -> int:
    if args.check:
        sq = latin_mod.parse_square(_read(args.check))
        doc = {"order": int(sq.shape[0]), "latin": latin_mod.is_latin(sq)}
        if doc["latin"]:
            diag = sq.diagonal()
            doc["constant_diagonal"] = bool((diag == diag[0]).all()) if len(diag) else True
            doc["intercalates"] = len(latin_mod.find_intercalates(sq))
            doc["principal_intercalates"] = len(latin_mod.find_intercalates(sq, principal_only=True))
        _write(args.out, _json(doc))
        return EXIT_OK if doc["latin"] else EXIT_INVALID
    if args.n is None:
        raise BadInput("latin needs an order n or --check FILE")
    _write(args.out, latin_mod.format_square(latin_mod.latin_square_no_principal(args.n)))
    return EXIT_OK


def cmd_inspect(args) -> int:
    report = reducibility_inspection(jobs=args.jobs)
    _write(args.out, _json(report.to_doc()))
    return EXIT_OK if not report.residual else EXIT_INVALID


def cmd_gen(args) -> int:
    params: list = list(args.params)
    if args.kind == "random_outerplanar":
        params += [args.p, args.seed, args.max_degree]
    elif args.kind in RANDOM_KINDS:
        params.append(args.seed)
    try:
        g: Graph = generate(args.kind, *params)
    except TypeError as exc:
        raise BadInput(f"wrong number of parameters for {args.kind}: {exc}") from None
    _write(args.out, dump_graph(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="incidence-coloring",
                                     description="Defective incidence colorings: build, verify, search.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    def io(p, inp=True):
        if inp:
            p.add_argument("--in", dest="inp", metavar="FILE", help="input file (default: stdin)")
        p.add_argument("--out", metavar="FILE", help="output file (default: stdout)")

    p = sub.add_parser("color", help="colour a graph with the fewest colours")
    p.add_argument("--d", type=_positive, default=1, help="defect bound (default 1)")
    p.add_argument("--one-based", action="store_true", help="print colours as 1..k")
    io(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring document")
    p.add_argument("--d", type=_non_negative, default=1, help="defect bound (default 1)")
    p.add_argument("--conditional", type=_positive, metavar="BIG_DELTA",
                   help="check a conditional coloring with this palette instead")
    p.add_argument("--graph", metavar="FILE", help="edge list the coloring must match "
                                                   "(default: the graph implied by the coloring)")
    io(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("chromatic", help="exact defective incidence chromatic number by search")
    p.add_argument("--d", type=_non_negative, default=1)
    p.add_argument("--kmax", type=_non_negative, required=True)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="node limit per search")
    io(p)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("latin", help="Latin square without principal intercalates")
    p.add_argument("n", type=_positive, nargs="?")
    p.add_argument("--check", metavar="FILE", help="report on a square read from FILE instead")
    io(p, inp=False)
    p.set_defaults(func=cmd_latin)

    p = sub.add_parser("inspect", help="computer-assisted checks")
    p.add_argument("target", choices=["t1"])
    p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    io(p, inp=False)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("gen", help="generate a graph as an edge list")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("params", type=int, nargs="*", help="sizes, e.g. n or m n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5, help="chord deletion probability")
    p.add_argument("--max-degree", type=_positive, default=None)
    io(p, inp=False)
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UnsupportedGraphError as exc:
        print(f"unsupported graph: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceeded as exc:
        print(f"search budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LatinSquareError as exc:
        print(f"latin: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (BadInput, GraphFormatError, ColoringMismatchError, ValueError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
