import random
from itertools import combinations

import pytest

from helpers import H_SHAPE, cycle_graph, graph, path_graph
from pathcontract.graph import NotConnected
from pathcontract.patterns import claw, cycle, path
from pathcontract.witness import (
    InstanceTooLarge,
    MalformedWitness,
    bruteforce_p4_suitable,
    naive_contracts_to,
    oracle_contracts_to,
    oracle_longest_cycle_contraction,
    oracle_longest_path_contraction,
    oracle_suitable_pair,
    some_suitable_pair,
    verify_witness,
)


def test_verify_witness_accepts_and_reports():
    p6 = path_graph(6)
    assert verify_witness(p6, path(4), [{0}, {1, 2}, {3, 4}, {5}])
    bad = verify_witness(p6, path(4), [{0}, {1, 4}, {2, 3}, {5}])
    assert not bad and bad.condition == "i"
    overlap = verify_witness(p6, path(4), [{0}, {1, 2}, {2, 3, 4}, {5}])
    assert overlap.condition == "ii"
    wrong = verify_witness(cycle_graph(4), path(2), [{0}, {1, 2, 3}])
    assert wrong
    assert verify_witness(cycle_graph(3), path(3), [{0}, {1}, {2}]).condition == "iii"


def test_verify_witness_malformed():
    with pytest.raises(MalformedWitness):
        verify_witness(path_graph(3), path(2), [{0}, set()])
    with pytest.raises(MalformedWitness):
        verify_witness(path_graph(3), path(2), [{0}, {1, 2, 7}])
    with pytest.raises(MalformedWitness):
        verify_witness(path_graph(3), path(2), [{0, 1, 2}])


def test_oracle_examples():
    for n in range(2, 8):
        for k in range(2, n + 1):
            assert oracle_contracts_to(path_graph(n), path(k)) is not None
    for n in range(4, 9):
        assert oracle_contracts_to(cycle_graph(n), path(4)) is None
        assert oracle_longest_path_contraction(cycle_graph(n))[0] == 2
        assert oracle_longest_cycle_contraction(cycle_graph(n))[0] == n
    assert oracle_longest_path_contraction(graph(claw().edges()))[0] == 3
    assert oracle_longest_cycle_contraction(path_graph(5)) is None


def test_oracle_suitable_pair_examples():
    a, d = 0, 3
    assert oracle_suitable_pair(path_graph(4), a, d, 4) is not None
    c6 = cycle_graph(6)
    for u, v in combinations(range(6), 2):
        assert oracle_suitable_pair(c6, u, v, 4) is None
    w = oracle_suitable_pair(H_SHAPE, 0, 5, 4)
    assert w is not None and w[1] == {1, 2, 3}
    assert verify_witness(H_SHAPE, path(4), [{0}, {1, 2, 3}, {4}, {5}])


def test_oracle_bounds_and_errors():
    with pytest.raises(InstanceTooLarge):
        oracle_contracts_to(path_graph(13), path(4))
    with pytest.raises(NotConnected):
        oracle_longest_path_contraction(graph([], 2))


def test_oracle_matches_naive_enumeration():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(3, 6)
        g = graph([e for e in combinations(range(n), 2) if rng.random() < 0.45], n)
        for h in (path(3), path(4), cycle(3), cycle(4)):
            mine = oracle_contracts_to(g, h)
            ref = naive_contracts_to(g, h)
            assert (mine is None) == (ref is None)
            if mine is not None:
                assert verify_witness(g, h, mine)


def test_path_monotonicity_and_pairs():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(4, 7)
        g = graph([(i, i + 1) for i in range(n - 1)] + [e for e in combinations(range(n), 2) if rng.random() < 0.2], n)
        k, w = oracle_longest_path_contraction(g)
        assert k >= 2 and verify_witness(g, path(k), w)
        for j in range(2, k + 1):
            assert oracle_contracts_to(g, path(j)) is not None
        for j in range(3, k + 1):
            found = some_suitable_pair(g, j)
            assert found is not None and verify_witness(g, path(j), found[2])


def test_bruteforce_p4_agrees_with_oracle():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(4, 8)
        g = graph([(i, i + 1) for i in range(n - 1)] + [e for e in combinations(range(n), 2) if rng.random() < 0.25], n)
        for u, v in combinations(range(n), 2):
            if g.has_edge(u, v):
                continue
            assert (bruteforce_p4_suitable(g, u, v) is None) == (oracle_suitable_pair(g, u, v, 4) is None)
