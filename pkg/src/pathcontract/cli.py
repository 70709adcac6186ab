"""Command-line front end.

Exit codes: 0 when the question was answered (yes or no), 2 for unreadable
or malformed input, 3 when a precondition such as class membership fails.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from . import hardness
from .classify import classify_lip, classify_lpc
from .formats import (
    FormatError,
    format_graph,
    format_roles,
    parse_graph,
    read_graph,
    read_hypergraph,
    witness_from_json,
    witness_to_json,
)
from .graph import Graph, GraphError, UnknownVertex, is_bipartite
from .induced_path import lip_h_free, longest_induced_path
from .matching import BipartiteGraph, maximum_matching
from .patterns import parse_pattern
from .witness import MalformedWitness, oracle_contracts_to, oracle_longest_path_contraction, verify_witness

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def _read_pattern(arg: str) -> Graph:
    """A pattern given by name (``P2+P4``) or as a graph file."""
    p = Path(arg)
    if p.exists():
        text = p.read_text()
        try:
            return parse_graph(text)
        except FormatError:
            return parse_pattern(text.strip())
    return parse_pattern(arg)


def _print_bags(k: int, bags) -> None:
    print(f"k={k}")
    print(witness_to_json(f"P{k}", bags))


def cmd_lpc(args) -> int:
    from .contract.lpc import longest_path_contractibility

    g = read_graph(args.graph)
    k, bags = longest_path_contractibility(g, args.cls, check_class=args.check_class)
    _print_bags(k, bags)
    return EXIT_OK


def cmd_suitability(args) -> int:
    from .contract.lpc import suitability

    g = read_graph(args.graph)
    bags = suitability(g, args.u, args.v, args.k, args.cls, check_class=args.check_class)
    if bags is None:
        print("no")
    else:
        print("yes")
        print(witness_to_json(f"P{args.k}", bags))
    return EXIT_OK


def _oracle_one(graph_path: str, pattern: Optional[str]):
    g = read_graph(graph_path)
    if pattern is None:
        k, bags = oracle_longest_path_contraction(g)
        return f"P{k}", bags
    h = _read_pattern(pattern)
    return pattern, oracle_contracts_to(g, h)


def cmd_oracle(args) -> int:
    if args.jobs > 1 and len(args.graphs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_oracle_one, args.graphs, [args.pattern] * len(args.graphs)))
    else:
        results = [_oracle_one(g, args.pattern) for g in args.graphs]
    for graph_path, (name, bags) in zip(args.graphs, results):
        prefix = f"{graph_path}: " if len(args.graphs) > 1 else ""
        if bags is None:
            print(f"{prefix}no")
        else:
            print(f"{prefix}{witness_to_json(name, bags)}")
    return EXIT_OK


def cmd_lip(args) -> int:
    g = read_graph(args.graph)
    if args.pattern:
        seq = lip_h_free(g, _read_pattern(args.pattern))
    else:
        seq = longest_induced_path(g, cap=args.cap)
    print(f"length={max(len(seq) - 1, 0)} vertices={len(seq)}")
    print(" ".join(map(str, seq)))
    return EXIT_OK


def _emit_gadget(gadget, out: Optional[str]) -> None:
    text = format_graph(gadget.graph)
    roles = format_roles(gadget.roles, gadget.graph)
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    Path(out + ".roles").write_text(roles)
    print(f"wrote {out} and {out}.roles")


def cmd_gen(args) -> int:
    h = read_hypergraph(args.hypergraph).normalized()
    if args.command == "gen-gh":
        gadget = hardness.build_gh(h)
    elif args.command == "gen-gh-prime":
        gadget = hardness.build_gh_prime(h)
    else:
        gadget = hardness.build_bar_gh(h, args.p)
    _emit_gadget(gadget, args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    h = _read_pattern(args.pattern)
    print(classify_lip(h).line())
    print(classify_lpc(h).line())
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    name, bags = witness_from_json(Path(args.witness).read_text())
    check = verify_witness(g, parse_pattern(name), bags)
    print("valid" if check else f"invalid: {check.condition} {check.detail}".rstrip())
    return EXIT_OK


def cmd_match(args) -> int:
    g = read_graph(args.graph)
    if not is_bipartite(g):
        raise GraphError("graph is not bipartite")
    colour = {}
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
    left = [x for x in g.vertices if colour[x] == 0]
    right = [x for x in g.vertices if colour[x] == 1]
    edges = [(a, b) for a in left for b in g.neighbors(a)]
    m = maximum_matching(BipartiteGraph.build(left, right, edges))
    print(f"size={len(m)}")
    for a in sorted(m):
        print(a, m[a])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathcontract", description="Path contractions of H-free graphs.")
    parser.add_argument("--trace", action="store_true", help="print BRANCH lines for solver branching steps")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_class(p):
        p.add_argument("--class", dest="cls", required=True, help="p2p4, p1p2p3, p1p5 or sp1p4:<s>")
        p.add_argument("--check-class", dest="check_class", action=argparse.BooleanOptionalAction, default=True)

    p = sub.add_parser("lpc", help="longest path contraction within a graph class")
    with_class(p)
    p.add_argument("graph")
    p.set_defaults(run=cmd_lpc)

    p = sub.add_parser("suitability", help="is (u, v) a P_k-suitable pair")
    with_class(p)
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(run=cmd_suitability)

    p = sub.add_parser("oracle", help="exhaustive contraction search")
    p.add_argument("graphs", nargs="+")
    p.add_argument("--pattern", help="target pattern; default is the longest path")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_oracle)

    p = sub.add_parser("lip", help="longest induced path")
    p.add_argument("graph")
    p.add_argument("--pattern", help="forbidden linear forest bounding the search")
    p.add_argument("--cap", type=int)
    p.set_defaults(run=cmd_lip)

    for name in ("gen-gh", "gen-gh-prime", "gen-bar-gh"):
        p = sub.add_parser(name, help="hardness gadget from a hypergraph")
        p.add_argument("hypergraph")
        p.add_argument("--out")
        if name == "gen-bar-gh":
            p.add_argument("--p", type=int, required=True)
        p.set_defaults(run=cmd_gen)

    p = sub.add_parser("classify", help="complexity verdicts for H-free inputs")
    p.add_argument("--pattern", required=True, help="pattern name or graph file")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("verify-witness", help="check a witness JSON against a graph")
    p.add_argument("graph")
    p.add_argument("witness")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("match", help="maximum matching of a bipartite graph")
    p.add_argument("graph")
    p.set_defaults(run=cmd_match)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    from .contract.trace import Tracer, tracing

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.trace:
            with tracing(Tracer(stream=sys.stdout)):
                return args.run(args)
        return args.run(args)
    except (FormatError, OSError, UnknownVertex, MalformedWitness, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
