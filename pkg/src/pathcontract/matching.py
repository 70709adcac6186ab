"""Hopcroft-Karp maximum matching on bipartite graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Set, Tuple

Node = Hashable


@dataclass(frozen=True)
class BipartiteGraph:
    left: Tuple[Node, ...]
    right: Tuple[Node, ...]
    edges: FrozenSet[Tuple[Node, Node]]
    _adj: Dict[Node, Tuple[Node, ...]] = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    @classmethod
    def build(cls, left: Iterable[Node], right: Iterable[Node], edges: Iterable[Tuple[Node, Node]]) -> "BipartiteGraph":
        left = tuple(sorted(set(left)))
        right = tuple(sorted(set(right)))
        ls, rs = set(left), set(right)
        if ls & rs:
            raise ValueError("left and right sides must be disjoint")
        es = frozenset(edges)
        for a, b in es:
            if a not in ls or b not in rs:
                raise ValueError(f"edge {a}-{b} does not go from left to right")
        adj: Dict[Node, List[Node]] = {a: [] for a in left}
        for a, b in es:
            adj[a].append(b)
        frozen = {a: tuple(sorted(bs)) for a, bs in adj.items()}
        return cls(left, right, es, frozen)

    def neighbors(self, a: Node) -> Tuple[Node, ...]:
        return self._adj[a]


def maximum_matching(b: BipartiteGraph) -> Dict[Node, Node]:
    """Maximum matching as a left -> right map.

    Phases alternate a BFS that layers the graph from the free left vertices
    with DFS passes that augment along vertex-disjoint shortest paths. Vertices
    and neighbours are scanned in sorted order, so the result is reproducible.
    """
    match_l: Dict[Node, Optional[Node]] = {a: None for a in b.left}
    match_r: Dict[Node, Optional[Node]] = {x: None for x in b.right}
    INF = float("inf")

    while True:
        dist: Dict[Node, float] = {}
        queue: deque = deque()
        for a in b.left:
            if match_l[a] is None:
                dist[a] = 0
                queue.append(a)
            else:
                dist[a] = INF
        shortest = INF
        while queue:
            a = queue.popleft()
            if dist[a] >= shortest:
                continue
            for x in b.neighbors(a):
                nxt = match_r[x]
                if nxt is None:
                    shortest = min(shortest, dist[a] + 1)
                elif dist[nxt] == INF:
                    dist[nxt] = dist[a] + 1
                    queue.append(nxt)
        if shortest == INF:
            break

        def augment(a: Node) -> bool:
            # iterative would be safer for huge inputs; recursion depth is the
            # phase length, which stays small here
            for x in b.neighbors(a):
                nxt = match_r[x]
                if nxt is None:
                    if dist[a] + 1 == shortest:
                        match_l[a], match_r[x] = x, a
                        return True
                elif dist[nxt] == dist[a] + 1 and augment(nxt):
                    match_l[a], match_r[x] = x, a
                    return True
            dist[a] = INF
            return False

        for a in b.left:
            if match_l[a] is None:
                augment(a)

    return {a: x for a, x in match_l.items() if x is not None}


def koenig_cover(b: BipartiteGraph, matching: Dict[Node, Node]) -> Set[Node]:
    """Minimum vertex cover read off the alternating reachability from free left vertices."""
    match_r = {x: a for a, x in matching.items()}
    seen_l: Set[Node] = set()
    seen_r: Set[Node] = set()
    queue = deque(a for a in b.left if a not in matching)
    seen_l.update(queue)
    while queue:
        a = queue.popleft()
        for x in b.neighbors(a):
            if x in seen_r or matching.get(a) == x:
                continue
            seen_r.add(x)
            nxt = match_r.get(x)
            if nxt is not None and nxt not in seen_l:
                seen_l.add(nxt)
                queue.append(nxt)
    return (set(b.left) - seen_l) | seen_r


def has_augmenting_path(b: BipartiteGraph, matching: Dict[Node, Node]) -> bool:
    match_r = {x: a for a, x in matching.items()}
    seen: Set[Node] = set()
    queue = deque(a for a in b.left if a not in matching)
    seen.update(queue)
    while queue:
        a = queue.popleft()
        for x in b.neighbors(a):
            if matching.get(a) == x:
                continue
            nxt = match_r.get(x)
            if nxt is None:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def is_matching(b: BipartiteGraph, matching: Dict[Node, Node]) -> bool:
    rights = list(matching.values())
    return len(rights) == len(set(rights)) and all((a, x) in b.edges for a, x in matching.items())
