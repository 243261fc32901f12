"""harary-lab command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 a computation bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import config
from .classic import (
    DOMINATING,
    INDEPENDENT,
    chromatic_dc,
    matching_polys,
    spectrum_char_poly,
    subset_generating_poly,
    tutte_statesum,
)
from .graphs import MultiGraph, from_graph6, parse_edge_list, parse_named, to_graph6
from .hankel import family_graphs, hankel_section, rank_exact, zero_pattern
from .harary import harary_polynomial
from .polyring import MPoly
from .properties import classify, parse_property
from .verify import SUITES, run_suite
from .xi import xi_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3

KINDS = (
    "harary:<prop>",
    "chromatic",
    "tutte",
    "xi",
    "matching",
    "matching-defect",
    "independence",
    "domination",
    "char",
    "laplacian",
    "adjoint",
    "convex",
)

_SIMPLE: dict[str, Callable[[MultiGraph], MPoly]] = {
    "chromatic": chromatic_dc,
    "tutte": tutte_statesum,
    "xi": xi_polynomial,
    "matching": lambda G: matching_polys(G).generating,
    "matching-defect": lambda G: matching_polys(G).defect,
    "independence": lambda G: subset_generating_poly(INDEPENDENT, G),
    "domination": lambda G: subset_generating_poly(DOMINATING, G),
    "char": lambda G: spectrum_char_poly(G, "adjacency"),
    "laplacian": lambda G: spectrum_char_poly(G, "laplacian"),
}


def poly_function(kind: str) -> Callable[[MultiGraph], MPoly]:
    """Map a ``--kind`` selector to a graph -> polynomial function."""
    if kind == "adjoint":
        kind = "harary:complete"
    elif kind == "convex":
        kind = "harary:connected"
    if kind.startswith("harary:"):
        P = parse_property(kind[len("harary:"):])
        return lambda G: harary_polynomial(P, G).poly
    if kind in _SIMPLE:
        return _SIMPLE[kind]
    raise ValueError(f"unknown polynomial kind {kind!r}; choose from {', '.join(KINDS)}")


def _read_graph(args) -> MultiGraph:
    if args.named is not None:
        return parse_named(args.named)
    if args.graph6 is not None:
        return from_graph6(args.graph6)
    text = sys.stdin.read() if args.edges == "-" else open(args.edges, encoding="ascii").read()
    return parse_edge_list(text)


def _emit(payload, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _render(p: MPoly, order: str) -> str:
    if order == "auto":
        ascending = p.nvars <= 1
    else:
        ascending = order == "asc"
    return p.render(ascending=ascending)


def _graph_label(G: MultiGraph) -> str:
    return to_graph6(G) if G.simple else repr(G.edges)


# ---------------------------------------------------------------- commands


def cmd_poly(args) -> int:
    G = _read_graph(args)
    p = poly_function(args.kind)(G)
    text = _render(p, args.order)
    payload = {"graph": _graph_label(G), "kind": args.kind, "polynomial": text, "terms": p.to_json()}
    _emit(payload, args.json, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(args.suite)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.check}  [{r.location}; {r.provenance}]"
            line += f"  expected: {r.expected}  computed: {r.computed}"
            if r.note:
                line += f"  note: {r.note}"
            print(line)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rank(args) -> int:
    F = poly_function(args.poly)
    graphs = family_graphs(args.family, args.size)
    S = hankel_section(F, args.op, graphs, name=args.poly)
    sizes = range(1, args.size + 1) if args.growth else [args.size]
    ranks = {m: rank_exact([row[:m] for row in S.entries[:m]]) for m in sizes}
    payload = {
        "poly": args.poly,
        "op": S.op,
        "family": args.family,
        "size": args.size,
        "rank": ranks[args.size],
        "ranks": {str(m): r for m, r in ranks.items()},
    }
    lines = [f"{'size':>4}  rank"] + [f"{m:>4}  {r}" for m, r in ranks.items()]
    lines.append(f"rank {ranks[args.size]}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    P = parse_property(args.prop)
    report = classify(P, args.nmax)
    d = report.as_dict()
    width = max(len(k) for k in d["flags"])
    lines = [f"property {d['property']} (orders <= {d['n_max']})"]
    for flag, val in d["flags"].items():
        line = f"  {flag:<{width}}  {'yes' if val else 'no'}"
        ce = d["counterexamples"][flag]
        if ce:
            line += f"  ({ce['graph']} --{ce['operation']}--> {ce['result'] or 'null'})"
        lines.append(line)
    _emit(d, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_zeros(args) -> int:
    P = parse_property(args.prop)
    zp = zero_pattern(P, args.family, args.imax, args.kmax)
    d = zp.as_dict()
    ks = range(1, args.kmax + 1)
    lines = [f"zeros of {P.name} on {args.family}_i at x = k (0 marks a zero)", "   i  " + " ".join(f"k={k}" for k in ks)]
    for i in range(1, args.imax + 1):
        lines.append(f"{i:>4}  " + " ".join(f"{'0' if zp.zero[(i, k)] else '.':>3}" for k in ks))
    lines.append("first zero: " + ", ".join(f"k={k}: {t if t is not None else '-'}" for k, t in zp.thresholds.items()))
    _emit(d, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_hankel(args) -> int:
    F = poly_function(args.poly)
    S = hankel_section(F, args.op, family_graphs(args.family, args.size), name=args.poly)
    d = S.to_json()
    if args.at is not None:
        vals = S.evaluated(x=args.at)
        if any(v.denominator != 1 for row in vals for v in row):
            raise ValueError("evaluation is not integral")
        d = {k: d[k] for k in ("polynomial", "op", "rows", "cols")}
        d["at"] = args.at
        d["matrix"] = [[int(v) for v in row] for row in vals]
        text = "\n".join(" ".join(str(v) for v in row) for row in d["matrix"])
    else:
        text = "\n".join(" | ".join(str(e) for e in row) for row in S.entries)
    _emit(d, args.json, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    b = config.all_bounds()
    _emit(b, args.json, "\n".join(f"{k:<15} {v}" for k, v in b.items()))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="harary-lab", description="Exact graph polynomials and their verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute one polynomial of one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--named", help="named graph, e.g. C4, K2,3, M3, K1uK2")
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge-list file ('n m' header, then m lines 'u v'); '-' reads stdin")
    p.add_argument("--kind", required=True, help="one of: " + ", ".join(KINDS))
    p.add_argument("--order", choices=("auto", "asc", "desc"), default="auto",
                   help="term order of text output; auto is ascending for one variable")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run reproduction checks")
    p.add_argument("--suite", default="all", choices=("all", *SUITES))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    def section_args(p):
        p.add_argument("--poly", required=True, help="polynomial kind, as for poly --kind")
        p.add_argument("--op", choices=("join", "union"), required=True)
        p.add_argument("--family", choices=("K", "E", "P", "C", "M"), required=True)
        p.add_argument("--size", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("rank", help="rank of a finite connection-matrix section")
    section_args(p)
    p.add_argument("--growth", action="store_true", help="also report every leading m x m section")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("hankel", help="export a connection-matrix section")
    section_args(p)
    p.add_argument("--at", type=int, help="evaluate entries at x = AT")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("classify", help="closure flags of a property on small graphs")
    p.add_argument("--prop", required=True)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("zeros", help="zero pattern of chi_P(F_i; k)")
    p.add_argument("--prop", required=True)
    p.add_argument("--family", choices=("K", "E", "P", "C", "M"), required=True)
    p.add_argument("--imax", type=int, default=8)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("bounds", help="show the active size bounds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except config.BoundExceeded as exc:
        print(f"harary-lab: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValueError, KeyError, OSError) as exc:
        print(f"harary-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
