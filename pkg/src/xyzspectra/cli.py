"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 irregular input graph, 4 formula evaluation error.  Polynomial output
is the ascending coefficient list in decimal, one line, so runs over the
same input are byte-identical.  Data goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import sys

from .exactpoly import DegreeMismatch, NotDivisible, charpoly
from .formulas import (
    descriptor_for,
    formula_charpoly,
    list_cases,
    render_formula_instantiated,
)
from .graph import Graph, GraphError, format_edge_list, generate, parse_edge_list, regularity
from .linalg import adjacency, laplacian, signless_laplacian
from .transform import XyzCase, xyz_transform
from .verify import default_corpus, report_to_json, run_corpus, verify_case

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IRREGULAR = 3
EXIT_FORMULA = 4

_MATRICES = {"A": adjacency, "L": laplacian, "Q": signless_laplacian}


def _fail(code: int, message: str) -> int:
    print(message, file=sys.stderr)
    return code


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_case(text: str) -> XyzCase:
    return XyzCase.parse(text)


def cmd_gen(args) -> int:
    try:
        g = generate(args.kind, [int(p) for p in args.params])
    except (GraphError, ValueError) as exc:
        return _fail(EXIT_USAGE, f"gen: {exc}")
    _emit(format_edge_list(g), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    try:
        case = _parse_case(args.case)
    except GraphError as exc:
        return _fail(EXIT_USAGE, f"transform: {exc}")
    try:
        g = _load_graph(args.input)
    except (OSError, GraphError) as exc:
        return _fail(EXIT_USAGE, f"transform: {exc}")
    if regularity(g) is None:
        return _fail(EXIT_IRREGULAR, "transform: input graph is not regular")
    _emit(format_edge_list(xyz_transform(g, case)), args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    try:
        g = _load_graph(args.input)
    except (OSError, GraphError) as exc:
        return _fail(EXIT_USAGE, f"charpoly: {exc}")
    poly = charpoly(_MATRICES[args.matrix](g))
    print(poly.to_string())
    return EXIT_OK


def cmd_formula(args) -> int:
    try:
        case = _parse_case(args.case)
    except GraphError as exc:
        return _fail(EXIT_USAGE, f"formula: {exc}")
    try:
        g = _load_graph(args.input)
    except (OSError, GraphError) as exc:
        return _fail(EXIT_USAGE, f"formula: {exc}")
    r = regularity(g)
    if r is None:
        return _fail(EXIT_IRREGULAR, "formula: input graph is not regular")
    desc = descriptor_for(case)
    f = charpoly(signless_laplacian(g))
    try:
        poly = formula_charpoly(desc, g.n, g.m, r, f)
    except (NotDivisible, DegreeMismatch) as exc:
        return _fail(EXIT_FORMULA, f"formula: descriptor {case}: {exc}")
    print(poly.to_string())
    print(f"# {render_formula_instantiated(desc, g.n, g.m, r)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if (args.case is None) == (not args.all):
        return _fail(EXIT_USAGE, "verify: pass exactly one of --case or --all")
    try:
        g = _load_graph(args.input)
    except (OSError, GraphError) as exc:
        return _fail(EXIT_USAGE, f"verify: {exc}")
    if regularity(g) is None:
        return _fail(EXIT_IRREGULAR, "verify: input graph is not regular")
    if args.all:
        cases = list_cases()
    else:
        try:
            cases = [_parse_case(args.case)]
        except GraphError as exc:
            return _fail(EXIT_USAGE, f"verify: {exc}")
    bad = 0
    for case in cases:
        res = verify_case(g, case)
        tag = "PASS" if res.outcome == "match" else "FAIL"
        detail = "" if res.outcome == "match" else f"  [{res.outcome}: {res.error or 'nonzero diff'}]"
        print(f"{tag} {case}{detail}")
        if res.outcome != "match":
            bad += 1
    return EXIT_OK if bad == 0 else EXIT_MISMATCH


def cmd_corpus(args) -> int:
    report = run_corpus(default_corpus())
    text = report_to_json(report)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    matched = sum(mt[0] for mt in report.per_case.values())
    total = sum(mt[1] for mt in report.per_case.values())
    print(f"corpus: {matched}/{total} matched", file=sys.stderr)
    return EXIT_OK if report.all_match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xyzspectra",
        description="Exact signless-Laplacian polynomials of graph transformations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write its edge list")
    p.add_argument("kind", help="cycle | complete | complete_bipartite | petersen | hypercube | circulant")
    p.add_argument("params", nargs="*", help="integer parameters for the generator")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("transform", help="apply a transformation case to a graph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--case", required=True, help="three symbols over 01+-, e.g. +0-")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(fn=cmd_transform)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a graph matrix")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--matrix", choices=sorted(_MATRICES), default="Q")
    p.set_defaults(fn=cmd_charpoly)

    p = sub.add_parser("formula", help="evaluate the closed form for one case")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--case", required=True)
    p.set_defaults(fn=cmd_formula)

    p = sub.add_parser("verify", help="closed form vs construction for one graph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--case")
    p.add_argument("--all", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("corpus", help="run the default corpus and write a JSON report")
    p.add_argument("--report", help="report file (default stdout)")
    p.set_defaults(fn=cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
