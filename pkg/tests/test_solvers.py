import io
import random
from itertools import combinations

import pytest

from helpers import cycle_graph, graph, path_graph
from pathcontract.contract import (
    Context,
    Solution,
    Tracer,
    family_for,
    longest_path_contractibility,
    lpc_sp1p4,
    p4_suitability_p1p2p3,
    p4_suitability_p1p5,
    p4_suitability_p2p4,
    p5_suitability_p2p4,
    p6_suitability_p1p5,
    p7_suitability_p1p2p3,
    suitability,
    tracing,
)
from pathcontract.contract import p2p4
from pathcontract.graph import NotConnected, NotInClass, contract_edge, distance
from pathcontract.patterns import claw, path
from pathcontract.sweep import atlas_graphs, members, random_cograph, random_members
from pathcontract.witness import AdjacentPair, bruteforce_p4_suitable, oracle_longest_path_contraction, oracle_suitable_pair, verify_witness

CLASSES = ["p2p4", "p1p2p3", "p1p5", "sp1p4:0", "sp1p4:1", "sp1p4:2"]


def test_bare_paths():
    for tag, top in [("p2p4", 6), ("p1p2p3", 7), ("p1p5", 6), ("sp1p4:2", 7)]:
        for k in range(4, top + 1):
            g = path_graph(k)
            bags = suitability(g, 0, k - 1, k, tag)
            assert bags == [frozenset({i}) for i in range(k)]


def test_p4_apis_return_solutions():
    assert p4_suitability_p2p4(path_graph(4), 0, 3) == Solution(frozenset(), frozenset())
    assert p4_suitability_p1p2p3(path_graph(4), 0, 3) is not None
    assert p4_suitability_p1p5(path_graph(4), 0, 3) is not None
    c6 = cycle_graph(6)
    assert p4_suitability_p2p4(c6, 0, 3) is None
    assert p4_suitability_p1p5(c6, 0, 3) is None


def test_vacuous_long_paths():
    # every (P2+P4)-free graph is P7-free and every (P1+P2+P3)-free graph is P8-free
    assert suitability(path_graph(7), 0, 6, 7, "p1p2p3") is not None
    g = graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert suitability(g, 0, 3, 7, "p2p4") is None


def test_lpc_examples():
    assert longest_path_contractibility(path_graph(6), "p2p4")[0] == 6
    assert longest_path_contractibility(cycle_graph(6), "p2p4")[0] == 2
    assert longest_path_contractibility(graph(claw().edges()), "p1p5")[0] == 3
    assert longest_path_contractibility(graph([], 1), "p1p5") == (1, [frozenset({0})])
    assert longest_path_contractibility(path_graph(2), "p1p5")[0] == 2
    assert lpc_sp1p4(path_graph(5), 1)[0] == 5
    assert lpc_sp1p4(path_graph(7), 2)[0] == 7


def test_sp1p4_example_p6_is_outside_the_class():
    with pytest.raises(NotInClass):
        lpc_sp1p4(path_graph(6), 1)


def test_cographs_stay_below_four():
    rng = random.Random(0)
    for _ in range(40):
        g = random_cograph(rng.randint(2, 9), rng)
        k, bags = lpc_sp1p4(g, 0)
        assert k <= 3 and verify_witness(g, path(k), bags)


def test_errors():
    with pytest.raises(NotInClass):
        longest_path_contractibility(path_graph(7), "p1p5")
    with pytest.raises(NotConnected):
        longest_path_contractibility(graph([], 2), "p2p4")
    with pytest.raises(AdjacentPair):
        suitability(path_graph(4), 0, 1, 4, "p2p4")
    with pytest.raises(ValueError):
        family_for("p3p3")
    assert family_for("2P1+P4").kmax == 8
    assert family_for("P2+P4-free").name == "p2p4"


@pytest.mark.parametrize("tag", CLASSES)
def test_agrees_with_oracle_up_to_six_vertices(tag):
    fam = family_for(tag)
    for g in members(atlas_graphs(6), fam.pattern):
        k, bags = longest_path_contractibility(g, tag)
        assert k == oracle_longest_path_contraction(g)[0]
        assert verify_witness(g, path(k), bags)
        for u, v in combinations(g.vertices, 2):
            if g.has_edge(u, v):
                continue
            for kk in range(4, min(fam.kmax, g.n) + 1):
                mine = Context(fam).solve(g, u, v, kk)
                assert (mine is None) == (oracle_suitable_pair(g, u, v, kk) is None)


def test_lifting_through_chained_contractions():
    rng = random.Random(12)
    done = 0
    for g in random_members(12, 40, family_for("p1p5").pattern, seed=3):
        h = g
        for _ in range(3):
            e = rng.choice(h.edges())
            h = contract_edge(h, *e)
        k, bags = longest_path_contractibility(h, "p1p5")
        assert verify_witness(h, path(k), bags)
        lifted = [h.lift(b) for b in bags]
        assert verify_witness(g, path(k), lifted)
        done += 1
    assert done == 40


def test_trace_lines():
    out = io.StringIO()
    with tracing(Tracer(stream=out)) as tr:
        suitability(path_graph(6), 0, 5, 6, "p1p5")
    assert tr.lines and all(line.startswith("BRANCH ") for line in tr.lines)
    assert out.getvalue().splitlines() == tr.lines
    first = tr.lines[0].split()
    assert first[1] == "1" and first[2] == "0"


@pytest.mark.parametrize("tag", ["p2p4", "p1p2p3", "p1p5", "sp1p4:1"])
def test_branch_children_only_keep_yes_instances(tag):
    # a yes-child lifts to a yes-parent, and a yes-parent reaches some yes-child
    fam = family_for(tag)
    checked = 0
    for n in (7, 8):
        for g in random_members(n, 25, fam.pattern, seed=n):
            for u, v in combinations(g.vertices, 2):
                if g.has_edge(u, v):
                    continue
                for k in range(4, min(fam.kmax, n) + 1):
                    if distance(g, u, v) < k - 1:
                        continue
                    parent = oracle_suitable_pair(g, u, v, k) is not None
                    with tracing(Tracer(keep_instances=True)) as tr:
                        Context(fam).solve(g, u, v, k)
                    top = [c for c in tr.children if c.parent == 0 and c.graph is not None]
                    kids = [oracle_suitable_pair(c.graph, c.u, c.v, c.k) is not None for c in top]
                    if any(kids):
                        assert parent
                    if parent and top and all(c.label.startswith(("reduce", "I:")) for c in top):
                        assert any(kids)
                    checked += 1
    assert checked > 50


def _planted(rng, qa):
    qs = list(range(4, 4 + qa))
    rs = list(range(4 + qa, 4 + 2 * qa))
    nt = rng.randint(qa, qa + 3)
    ts = list(range(4 + 2 * qa, 4 + 2 * qa + nt))
    e = {(0, 2), (1, 3)} | {(0, q) for q in qs} | {(1, r) for r in rs}
    for t in ts:
        if rng.random() < 0.9:
            e.add((2, t))
        if rng.random() < 0.9:
            e.add((3, t))
        for q in qs + rs:
            if rng.random() < 0.3:
                e.add((q, t))
    for a, b in combinations(ts, 2):
        if rng.random() < 0.1:
            e.add((a, b))
    return graph(e, 4 + 2 * qa + nt)


def test_u_side_search_is_sound(monkeypatch):
    # the planted graphs are outside the class; only soundness is claimed here
    calls = {"finish": 0}
    real = p2p4._finish

    def counting(*a, **kw):
        calls["finish"] += 1
        return real(*a, **kw)

    monkeypatch.setattr(p2p4, "_finish", counting)
    rng = random.Random(21)
    found = 0
    for _ in range(120):
        g = _planted(rng, rng.choice([3, 4]))
        bags = p2p4.u_feasibility(g, 0, 1, 0)
        if bags is not None:
            found += 1
            assert verify_witness(g, path(4), bags)
            assert bruteforce_p4_suitable(g, 0, 1) is not None
    assert found > 0 and calls["finish"] > 0


def test_p2p4_agrees_with_brute_force_on_larger_members():
    fam = family_for("p2p4")
    for g in random_members(13, 60, fam.pattern, seed=13):
        for u, v in combinations(g.vertices, 2):
            if g.has_edge(u, v) or distance(g, u, v) < 3:
                continue
            mine = p4_suitability_p2p4(g, u, v)
            assert (mine is None) == (bruteforce_p4_suitable(g, u, v) is None)


def test_other_variants():
    assert p5_suitability_p2p4(path_graph(5), 0, 4) is not None
    assert p6_suitability_p1p5(path_graph(6), 0, 5) is not None
    assert p7_suitability_p1p2p3(path_graph(7), 0, 6) is not None
