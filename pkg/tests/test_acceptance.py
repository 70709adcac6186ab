"""Acceptance criteria, one test each.

Every test records a PASS or FAIL line; the lines are printed in the pytest
terminal summary and by running this file directly.
"""

import random
import sys
import time
from itertools import combinations, product
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pathcontract.classify import NP_COMPLETE, POLYNOMIAL, classify_lip, classify_lpc
from pathcontract.contract import family_for, longest_path_contractibility
from pathcontract.formats import Hypergraph
from pathcontract.graph import Graph, contract_edge, distance, eccentric_pairs, girth, is_bipartite, is_h_free
from pathcontract.hardness import (
    bar_gh_witness,
    build_bar_gh,
    build_gh,
    build_gh_prime,
    hampath_bruteforce,
    hampath_to_lip_linegraph,
    hampath_to_lip_subdivision,
    two_colouring,
)
from pathcontract.induced_path import longest_induced_path
from pathcontract.matching import BipartiteGraph, maximum_matching
from pathcontract.patterns import P2_P4, cycle, linear_forest, parse_pattern, path
from pathcontract.sweep import SweepReport, atlas_graphs, compare_with_oracle, members, random_members
from pathcontract.witness import (
    oracle_contracts_to,
    oracle_longest_path_contraction,
    oracle_suitable_pair,
    some_suitable_pair,
    verify_witness,
)

RESULTS = []

CLASSES = ["p2p4", "p1p2p3", "p1p5", "sp1p4:0", "sp1p4:1", "sp1p4:2"]


def record(number, title, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


def hypergraphs(max_m=3, max_n=3):
    for m in range(1, max_m + 1):
        subsets = [frozenset(c) for r in range(1, m + 1) for c in combinations(range(m), r)]
        for n in range(1, max_n + 1):
            for es in product(subsets, repeat=n - 1):
                yield Hypergraph(m, list(es) + [frozenset(range(m))])


def criterion_1():
    t0 = time.time()
    report = SweepReport()
    for tag in CLASSES:
        pattern = family_for(tag).pattern
        compare_with_oracle(members(atlas_graphs(7), pattern), tag, report)
        for n in (8, 9):
            compare_with_oracle(random_members(n, 250, pattern, seed=100 * n + len(tag)), tag, report)
    detail = f"{report.graphs} graphs, {report.calls} pair checks, {len(report.failures)} disagreements, {time.time() - t0:.0f}s"
    if report.failures:
        detail += f"; first: {report.failures[0].detail}"
    return report.ok, detail


def criterion_2():
    rng = random.Random(2)
    checked = bad = 0
    for tag in CLASSES:
        fam = family_for(tag)
        for g in random_members(10, 30, fam.pattern, seed=len(tag)):
            k, bags = longest_path_contractibility(g, tag)
            ok_k, ok_bags = oracle_longest_path_contraction(g)
            checked += 2
            bad += not verify_witness(g, path(k), bags)
            bad += not verify_witness(g, path(ok_k), ok_bags)
            h = g
            for _ in range(3):
                h = contract_edge(h, *rng.choice(h.edges()))
            k2, bags2 = longest_path_contractibility(h, tag)
            checked += 2
            bad += not verify_witness(h, path(k2), bags2)
            bad += not verify_witness(g, path(k2), [h.lift(b) for b in bags2])
    return bad == 0, f"{checked} witnesses, {bad} invalid"


def criterion_3():
    checked = bad = 0
    for g in atlas_graphs(7):
        for k in (3, 4, 5):
            if k > g.n:
                continue
            whole = oracle_contracts_to(g, path(k)) is not None
            pair = some_suitable_pair(g, k) is not None
            checked += 1
            bad += whole != pair
    return bad == 0, f"{checked} (graph, k) checks, {bad} mismatches"


FREENESS = [path(6), linear_forest(1, 1, 2, 2), linear_forest(2, 2, 2), linear_forest(3, 3)]


def criterion_4():
    mismatches = []
    free_bad = total = 0
    for h in hypergraphs():
        total += 1
        g = build_gh(h).graph
        if (two_colouring(h) is not None) != (oracle_contracts_to(g, path(4)) is not None):
            mismatches.append(h)
        free_bad += not is_h_free(g, FREENESS)
    ok = not mismatches and not free_bad
    detail = f"{total} hypergraphs, {len(mismatches)} colouring/P4 mismatches, {free_bad} freeness failures"
    if mismatches:
        detail += f"; e.g. {mismatches[0]!r}"
    return ok, detail


def criterion_5():
    mismatches = []
    free_bad = total = 0
    for h in hypergraphs():
        total += 1
        g = build_gh_prime(h).graph
        if (two_colouring(h) is not None) != (oracle_contracts_to(g, cycle(4)) is not None):
            mismatches.append(h)
        free_bad += not is_h_free(g, [P2_P4])
    ok = not mismatches and not free_bad
    detail = f"{total} hypergraphs, {len(mismatches)} colouring/C4 mismatches, {free_bad} freeness failures"
    if mismatches:
        detail += f"; e.g. {mismatches[0]!r}"
    return ok, detail


def criterion_6():
    total = 0
    problems = {"bipartite": 0, "girth": 0, "distance": 0, "not strictly maximal": 0, "witness": 0}
    example = ""
    for p in (4, 6):
        for h in hypergraphs():
            gd = build_bar_gh(h, p)
            g = gd.graph
            total += 1
            problems["bipartite"] += not is_bipartite(g)
            gi = girth(g)
            problems["girth"] += gi is not None and gi < p
            d = distance(g, gd.tbar1, gd.tbar2)
            problems["distance"] += d != 2 * p - 1
            diameter, pairs = eccentric_pairs(g)
            if diameter != d or len(pairs) != 1:
                problems["not strictly maximal"] += 1
                if not example:
                    example = f"p={p} {h!r}: t-bar distance {d}, diameter {diameter}"
            col = two_colouring(h)
            if col is not None:
                problems["witness"] += not verify_witness(g, path(2 * p), bar_gh_witness(gd, h, col))
    bad = {k: v for k, v in problems.items() if v}
    detail = f"{total} gadgets, failures {bad or 'none'}"
    if example:
        detail += f"; e.g. {example}"
    return not bad, detail


def criterion_7():
    graphs = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= 6:
            graphs.append(Graph.from_edges(g.nodes, g.edges))
    rng = random.Random(7)
    for _ in range(200):
        graphs.append(Graph.from_edges(range(7), [e for e in combinations(range(7), 2) if rng.random() < 0.4]))
    bad = 0
    for g in graphs:
        n = g.n
        ham = hampath_bruteforce(g) is not None
        sub = longest_induced_path(hampath_to_lip_subdivision(g), cap=2 * n - 1)
        lg = longest_induced_path(hampath_to_lip_linegraph(g), cap=max(n - 1, 0))
        bad += ham != (len(sub) - 1 >= 2 * n - 2)
        bad += ham != (len(lg) >= n - 1)
    return bad == 0, f"{len(graphs)} graphs, {bad} mismatches"


def _brute_matching(b):
    index = {x: i for i, x in enumerate(b.right)}
    adj = {a: [index[x] for x in b.neighbors(a)] for a in b.left}
    left = list(b.left)
    memo = {}

    def best(i, used):
        if i == len(left):
            return 0
        key = (i, used)
        if key not in memo:
            top = best(i + 1, used)
            for j in adj[left[i]]:
                if not used >> j & 1:
                    top = max(top, 1 + best(i + 1, used | 1 << j))
            memo[key] = top
        return memo[key]

    return best(0, 0)


def criterion_8():
    checked = bad = 0
    for nl in range(0, 7):
        for nr in range(0, 7 - nl):
            pairs = [(a, b) for a in range(nl) for b in range(nl, nl + nr)]
            for mask in range(1 << len(pairs)):
                es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                b = BipartiteGraph.build(range(nl), range(nl, nl + nr), es)
                checked += 1
                bad += len(maximum_matching(b)) != _brute_matching(b)
    rng = random.Random(8)
    for size_lo, size_hi, count in ((7, 10, 2000), (11, 12, 1000)):
        for _ in range(count):
            total = rng.randint(size_lo, size_hi)
            nl = rng.randint(0, total)
            p = rng.random()
            es = [(a, b) for a in range(nl) for b in range(nl, total) if rng.random() < p]
            b = BipartiteGraph.build(range(nl), range(nl, total), es)
            checked += 1
            bad += len(maximum_matching(b)) != _brute_matching(b)
    return bad == 0, f"{checked} bipartite graphs, {bad} wrong sizes"


TABLE = [
    ("P6", NP_COMPLETE), ("3P2", NP_COMPLETE), ("2P3", NP_COMPLETE), ("2P1+2P2", NP_COMPLETE),
    ("K13", NP_COMPLETE), ("C3", NP_COMPLETE), ("C4", NP_COMPLETE), ("C5", NP_COMPLETE), ("C7", NP_COMPLETE),
    ("P2+P4", POLYNOMIAL), ("P1+P2+P3", POLYNOMIAL), ("P1+P5", POLYNOMIAL),
    ("P4", POLYNOMIAL), ("1P1+P4", POLYNOMIAL), ("2P1+P4", POLYNOMIAL), ("3P1+P4", POLYNOMIAL),
    ("2P2", POLYNOMIAL), ("P5", POLYNOMIAL),
]


def criterion_9():
    bad = []
    for name, want in TABLE:
        h = parse_pattern(name)
        lip_want = POLYNOMIAL if not name.startswith(("K", "C")) else NP_COMPLETE
        if classify_lpc(h).status != want or classify_lip(h).status != lip_want:
            bad.append(name)
    return not bad, f"{len(TABLE)} patterns, wrong: {bad or 'none'}"


def criterion_10():
    rng = random.Random(10)
    forests = [path(4), P2_P4, linear_forest(1, 5), linear_forest(1, 2, 3), linear_forest(2, 2), path(5), linear_forest(1, 1, 4)]
    checked = bad = 0
    while checked < 10000:
        n = rng.randint(2, 8)
        g = Graph.from_edges(range(n), [e for e in combinations(range(n), 2) if rng.random() < rng.random()])
        if not g.m:
            continue
        h = rng.choice(forests)
        if not is_h_free(g, [h]):
            continue
        checked += 1
        bad += not is_h_free(contract_edge(g, *rng.choice(g.edges())), [h])
    return bad == 0, f"{checked} H-free (graph, edge, H) triples, {bad} violations"


CRITERIA = [
    (1, "solvers agree with the oracle on every class", criterion_1),
    (2, "every returned witness verifies, also after chained contractions", criterion_2),
    (3, "P_k witness exists iff a suitable pair exists", criterion_3),
    (4, "2-colouring iff G_H contracts to P4, plus freeness", criterion_4),
    (5, "2-colouring iff G'_H contracts to C4, plus freeness", criterion_5),
    (6, "subdivided gadget structure and forward witness", criterion_6),
    (7, "Hamiltonian path iff long induced path after both reductions", criterion_7),
    (8, "maximum matching equals brute force", criterion_8),
    (9, "classifier reproduces the pattern table", criterion_9),
    (10, "contraction preserves linear-forest freeness", criterion_10),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(number, title, check):
    ok, detail = check()
    assert record(number, title, ok, detail), detail


if __name__ == "__main__":
    results = [record(n, t, *c()) for n, t, c in CRITERIA]
    sys.exit(0 if all(results) else 1)
