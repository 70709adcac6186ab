import random
from itertools import combinations

from pathcontract.matching import BipartiteGraph, has_augmenting_path, is_matching, koenig_cover, maximum_matching


def brute_max(b):
    edges = sorted(b.edges)
    for size in range(min(len(b.left), len(b.right)), 0, -1):
        for combo in combinations(edges, size):
            if len({a for a, _ in combo}) == size and len({x for _, x in combo}) == size:
                return size
    return 0


def random_bipartite(rng, nl, nr, p):
    left = [f"l{i}" for i in range(nl)]
    right = [f"r{i}" for i in range(nr)]
    return BipartiteGraph.build(left, right, [(a, x) for a in left for x in right if rng.random() < p])


def test_examples():
    k33 = BipartiteGraph.build("abc", "xyz", [(a, x) for a in "abc" for x in "xyz"])
    assert len(maximum_matching(k33)) == 3
    p4 = BipartiteGraph.build(["a", "c"], ["b", "d"], [("a", "b"), ("c", "b"), ("c", "d")])
    assert maximum_matching(p4) == {"a": "b", "c": "d"}


def test_against_brute_force_with_cover_and_no_augmenting_path():
    rng = random.Random(2)
    for _ in range(300):
        b = random_bipartite(rng, rng.randint(0, 6), rng.randint(0, 6), rng.random())
        m = maximum_matching(b)
        assert is_matching(b, m)
        assert len(m) == brute_max(b)
        assert not has_augmenting_path(b, m)
        cover = koenig_cover(b, m)
        assert len(cover) == len(m)
        assert all(a in cover or x in cover for a, x in b.edges)


def test_deterministic():
    rng = random.Random(9)
    b = random_bipartite(rng, 8, 8, 0.3)
    assert maximum_matching(b) == maximum_matching(b)
