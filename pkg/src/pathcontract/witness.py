"""Witness-structure verification and exhaustive contraction oracles.

A witness for a pattern ``h`` is a list of bags, one per pattern vertex in
id order. The oracles here are deliberately independent of the polynomial
solvers: they only know the definition of a witness structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .graph import (
    Graph,
    GraphError,
    NotConnected,
    UnknownVertex,
    bfs_distances,
    components_of,
    connected_components,
    eccentric_pairs,
    is_connected,
    is_forest,
)
from .patterns import cycle, path

Bags = List[FrozenSet[int]]

DEFAULT_BOUND = 12


class MalformedWitness(GraphError):
    pass


class InstanceTooLarge(GraphError):
    pass


class AdjacentPair(GraphError):
    pass


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    condition: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _normalize_bags(h: Graph, w: Union[Mapping[int, Iterable[int]], Sequence[Iterable[int]]]) -> Dict[int, FrozenSet[int]]:
    if isinstance(w, Mapping):
        bags = {x: frozenset(b) for x, b in w.items()}
        if set(bags) != set(h.vertices):
            raise MalformedWitness("bag keys must be exactly the pattern vertices")
    else:
        seq = list(w)
        if len(seq) != h.n:
            raise MalformedWitness(f"expected {h.n} bags, got {len(seq)}")
        bags = {x: frozenset(b) for x, b in zip(h.vertices, seq)}
    return bags


def verify_witness(g: Graph, h: Graph, w) -> WitnessCheck:
    """Check conditions (i) connected bags, (ii) partition, (iii) adjacency.

    ``w`` maps pattern vertices to bags, or lists bags in pattern-vertex
    order. The first violated condition is reported.
    """
    bags = _normalize_bags(h, w)
    for x, b in bags.items():
        if not b:
            raise MalformedWitness(f"bag of pattern vertex {x} is empty")
        for v in b:
            if v not in g:
                raise MalformedWitness(f"bag of pattern vertex {x} names unknown vertex {v}")
    for x in h.vertices:
        if not is_connected(g, bags[x]):
            return WitnessCheck(False, "i", f"bag {x} = {sorted(bags[x])} is not connected")
    owner: Dict[int, int] = {}
    for x in h.vertices:
        for v in bags[x]:
            if v in owner:
                return WitnessCheck(False, "ii", f"vertex {v} lies in bags {owner[v]} and {x}")
            owner[v] = x
    missing = sorted(set(g.vertices) - set(owner))
    if missing:
        return WitnessCheck(False, "ii", f"vertices {missing} are in no bag")
    touching = set()
    for a, b in g.edges():
        x, y = owner[a], owner[b]
        if x != y:
            touching.add((min(x, y), max(x, y)))
    for i, x in enumerate(h.vertices):
        for y in h.vertices[i + 1 :]:
            want = h.has_edge(x, y)
            have = (x, y) in touching
            if want != have:
                verb = "are not" if want else "are"
                return WitnessCheck(False, "iii", f"bags {x} and {y} {verb} adjacent")
    return WitnessCheck(True)


# exhaustive search


class _Search:
    """Assign host vertices, in id order, to pattern positions.

    Positions are tried in ascending order so the first complete assignment
    is the lexicographically smallest one.
    """

    def __init__(self, g: Graph, h: Graph, domains: Optional[List[int]] = None):
        self.hv = h.vertices
        self.k = h.n
        self.gv = g.vertices
        self.n = g.n
        idx = {v: i for i, v in enumerate(self.gv)}
        self.adj = [0] * self.n
        for v in self.gv:
            m = 0
            for x in g.neighbors(v):
                m |= 1 << idx[x]
            self.adj[idx[v]] = m
        hidx = {x: i for i, x in enumerate(self.hv)}
        self.hadj = [0] * self.k
        for x in self.hv:
            m = 1 << hidx[x]
            for y in h.neighbors(x):
                m |= 1 << hidx[y]
            self.hadj[hidx[x]] = m
        full = (1 << self.k) - 1
        self.domains = domains if domains is not None else [full] * self.n
        self.assign = [-1] * self.n
        self.bag = [0] * self.k
        self.hedges = [(i, j) for i in range(self.k) for j in range(i + 1, self.k) if self.hadj[i] >> j & 1]

    def _closed_component_breaks(self, b: int, unassigned: int) -> bool:
        rest = self.bag[b]
        adj = self.adj
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                f = frontier & -frontier
                frontier ^= f
                grow = adj[f.bit_length() - 1] & self.bag[b] & ~comp
                comp |= grow
                frontier |= grow
            rest &= ~comp
            if comp != self.bag[b]:
                reach = 0
                c = comp
                while c:
                    f = c & -c
                    c ^= f
                    reach |= adj[f.bit_length() - 1]
                if not reach & unassigned:
                    return True
        return False

    def run(self) -> Optional[Bags]:
        if self.n < self.k:
            return None
        for i in range(self.n):
            if not self.domains[i]:
                return None
        if self._rec(0):
            out = []
            for b in range(self.k):
                m = self.bag[b]
                out.append(frozenset(self.gv[i] for i in range(self.n) if m >> i & 1))
            return out
        return None

    def _rec(self, i: int) -> bool:
        if i == self.n:
            for a, b in self.hedges:
                ma = self.bag[a]
                reach = 0
                while ma:
                    f = ma & -ma
                    ma ^= f
                    reach |= self.adj[f.bit_length() - 1]
                if not reach & self.bag[b]:
                    return False
            return True
        remaining = self.n - i - 1
        unassigned = ((1 << self.n) - 1) & ~((1 << (i + 1)) - 1)
        bit = 1 << i
        nb = self.adj[i]
        earlier = nb & (bit - 1)
        allowed = self.domains[i]
        seen = earlier
        while seen:
            f = seen & -seen
            seen ^= f
            allowed &= self.hadj[self.assign[f.bit_length() - 1]]
            if not allowed:
                return False
        empties = sum(1 for b in range(self.k) if not self.bag[b])
        cand = allowed
        while cand:
            low = cand & -cand
            cand ^= low
            b = low.bit_length() - 1
            if empties - (1 if not self.bag[b] else 0) > remaining:
                continue
            self.assign[i] = b
            self.bag[b] |= bit
            ok = True
            touched = {b}
            seen = earlier
            while seen:
                f = seen & -seen
                seen ^= f
                touched.add(self.assign[f.bit_length() - 1])
            for c in touched:
                if self._closed_component_breaks(c, unassigned):
                    ok = False
                    break
            if ok and self._rec(i + 1):
                return True
            self.bag[b] &= ~bit
            self.assign[i] = -1
        return False


def _check_bound(g: Graph, h: Graph, bound: int) -> None:
    if h.n >= 3 and g.n > bound:
        raise InstanceTooLarge(f"host has {g.n} vertices, oracle bound is {bound}")


def oracle_contracts_to(g: Graph, h: Graph, bound: int = DEFAULT_BOUND) -> Optional[Bags]:
    """Lexicographically first h-witness structure of g, or None."""
    _check_bound(g, h, bound)
    if h.n == 0:
        return [] if g.n == 0 else None
    if _is_path_pattern(h) and h.n >= 2:
        if not is_connected(g):
            return None
        if g.n and eccentric_pairs(g)[0] < h.n - 1:
            return None
    return _Search(g, h).run()


def _is_path_pattern(h: Graph) -> bool:
    return h.key() == path(h.n).key() if h.n else False


def oracle_longest_path_contraction(g: Graph, bound: int = DEFAULT_BOUND) -> Tuple[int, Bags]:
    """Largest k such that g contracts to P_k, with a witness."""
    if g.n == 0 or not is_connected(g):
        raise NotConnected("graph must be connected and nonempty")
    if g.n == 1:
        return 1, [frozenset(g.vertices)]
    top = min(g.n, eccentric_pairs(g)[0] + 1)
    if top >= 3 and g.n > bound:
        raise InstanceTooLarge(f"host has {g.n} vertices, oracle bound is {bound}")
    for k in range(top, 0, -1):
        w = _Search(g, path(k)).run()
        if w is not None:
            return k, w
    raise AssertionError("a connected graph always contracts to a single vertex")


def oracle_longest_cycle_contraction(g: Graph, bound: int = DEFAULT_BOUND) -> Optional[Tuple[int, Bags]]:
    """Largest k ≥ 3 such that g contracts to C_k, or None."""
    if g.n == 0 or not is_connected(g):
        raise NotConnected("graph must be connected and nonempty")
    if is_forest(g):
        return None
    if g.n > bound:
        raise InstanceTooLarge(f"host has {g.n} vertices, oracle bound is {bound}")
    for k in range(g.n, 2, -1):
        w = _Search(g, cycle(k)).run()
        if w is not None:
            return k, w
    return None


def oracle_suitable_pair(g: Graph, u: int, v: int, k: int, bound: int = DEFAULT_BOUND) -> Optional[Bags]:
    """P_k witness with first bag {u} and last bag {v}, or None."""
    if u not in g or v not in g:
        raise UnknownVertex((u, v))
    if k < 3:
        raise ValueError("suitable pairs need k ≥ 3")
    if u == v:
        raise ValueError("u and v must differ")
    _check_bound(g, path(k), bound)
    if g.has_edge(u, v):
        return None
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    if v not in du or du[v] < k - 1:
        return None
    if len(du) != g.n:
        return None
    idx = {x: i for i, x in enumerate(g.vertices)}
    domains = [0] * g.n
    for x in g.vertices:
        if x == u:
            mask = 1
        elif x == v:
            mask = 1 << (k - 1)
        else:
            lo = max(1, k - 1 - dv[x])
            hi = min(k - 2, du[x])
            mask = 0
            for b in range(lo, hi + 1):
                mask |= 1 << b
            if du[x] == 1:
                mask &= 1 << 1
            if dv[x] == 1:
                mask &= 1 << (k - 2)
        domains[idx[x]] = mask
    return _Search(g, path(k), domains).run()


def some_suitable_pair(g: Graph, k: int, bound: int = DEFAULT_BOUND) -> Optional[Tuple[int, int, Bags]]:
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i + 1 :]:
            if g.has_edge(u, v):
                continue
            w = oracle_suitable_pair(g, u, v, k, bound)
            if w is not None:
                return u, v, w
    return None


# second, independent routes used to cross-check the search above


def naive_contracts_to(g: Graph, h: Graph, limit: int = 9) -> Optional[Bags]:
    """Plain enumeration of every map V(g) -> V(h) in lexicographic order."""
    if g.n > limit:
        raise InstanceTooLarge(f"naive enumeration limited to {limit} vertices")
    for assignment in product(range(h.n), repeat=g.n):
        bags = [set() for _ in range(h.n)]
        for v, b in zip(g.vertices, assignment):
            bags[b].add(v)
        if any(not b for b in bags):
            continue
        if verify_witness(g, h, bags):
            return [frozenset(b) for b in bags]
    return None


def bruteforce_p4_suitable(g: Graph, u: int, v: int) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Split T = V - N[u] - N[v] in every way and test both sides directly."""
    if g.has_edge(u, v):
        return None
    nu, nv = g.neighbors(u), g.neighbors(v)
    if not nu or not nv or nu & nv:
        return None
    t = sorted(set(g.vertices) - nu - nv - {u, v})
    for mask in range(1 << len(t)):
        su = frozenset(x for i, x in enumerate(t) if mask >> i & 1)
        sv = frozenset(t) - su
        left, right = nu | su, nv | sv
        if not is_connected(g, left) or not is_connected(g, right):
            continue
        if not any(g.neighbors(x) & right for x in left):
            continue
        return su, sv
    return None
