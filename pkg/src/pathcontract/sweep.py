"""Test corpora of connected H-free graphs and solver-vs-oracle comparisons."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .graph import Graph, contains_induced, is_connected
from .witness import oracle_longest_path_contraction, oracle_suitable_pair, verify_witness
from .patterns import path


def atlas_graphs(n_max: int) -> Iterator[Graph]:
    """Every connected graph on 1..n_max vertices (n_max <= 7), one per isomorphism class."""
    import networkx as nx

    if n_max > 7:
        raise ValueError("the atlas stops at 7 vertices")
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= n_max and nx.is_connected(g):
            yield Graph.from_edges(g.nodes, g.edges)


def members(graphs, pattern: Graph) -> Iterator[Graph]:
    for g in graphs:
        if contains_induced(g, pattern) is None:
            yield g


def random_members(n: int, count: int, pattern: Graph, seed: int, max_steps: int = 200000) -> List[Graph]:
    """Distinct connected H-free graphs on n vertices from a seeded edge-toggle walk.

    The walk starts at a star, which avoids every pattern here, and only
    accepts toggles that keep the graph connected and H-free.
    """
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = {(0, b) for b in range(1, n)}
    out: List[Graph] = []
    seen = set()
    for _ in range(max_steps):
        if len(out) >= count:
            break
        e = rng.choice(pairs)
        edges ^= {e}
        g = Graph.from_edges(range(n), edges)
        if not is_connected(g) or contains_induced(g, pattern) is not None:
            edges ^= {e}
            continue
        if g.key() not in seen:
            seen.add(g.key())
            out.append(g)
    return out


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Connected P4-free graph: a join of two random cographs."""

    def build(vs: Sequence[int]) -> set:
        if len(vs) == 1:
            return set()
        cut = rng.randint(1, len(vs) - 1)
        a, b = vs[:cut], vs[cut:]
        edges = build(a) | build(b)
        if rng.random() < 0.5:
            edges |= {(x, y) for x in a for y in b}
        return edges

    vs = list(range(n))
    cut = rng.randint(1, n - 1) if n > 1 else 1
    edges = build(vs[:cut]) | build(vs[cut:]) if n > 1 else set()
    edges |= {(x, y) for x in vs[:cut] for y in vs[cut:]}
    return Graph.from_edges(vs, edges)


@dataclass
class Disagreement:
    graph: Graph
    detail: str


@dataclass
class SweepReport:
    graphs: int = 0
    calls: int = 0
    failures: List[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def compare_with_oracle(graphs, class_tag: str, report: Optional[SweepReport] = None) -> SweepReport:
    """Check lpc values and every (u, v, k) suitability answer against the oracle."""
    from .contract.common import Context
    from .contract.lpc import family_for, longest_path_contractibility

    fam = family_for(class_tag)
    report = report or SweepReport()
    for g in graphs:
        report.graphs += 1
        k, bags = longest_path_contractibility(g, class_tag)
        ok, _ = oracle_longest_path_contraction(g)
        if k != ok:
            report.failures.append(Disagreement(g, f"lpc {k} but oracle {ok}"))
        if not verify_witness(g, path(k), bags):
            report.failures.append(Disagreement(g, f"invalid P{k} witness"))
        ctx = Context(fam)
        vs = g.vertices
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if g.has_edge(u, v):
                    continue
                for kk in range(4, min(fam.kmax, g.n) + 1):
                    report.calls += 1
                    mine = ctx.solve(g, u, v, kk)
                    theirs = oracle_suitable_pair(g, u, v, kk)
                    if (mine is None) != (theirs is None):
                        report.failures.append(Disagreement(g, f"P{kk} pair ({u},{v}): solver {mine is not None}, oracle {theirs is not None}"))
    return report
