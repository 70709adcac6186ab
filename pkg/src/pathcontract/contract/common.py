"""Shared machinery for P_k-suitability: solutions, the contraction rule,
constant-size core checks, distance reduction and boundary peeling."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..graph import (
    Graph,
    GraphError,
    bfs_distances,
    components_of,
    contract_edge,
    contract_set,
    distance,
    is_connected,
    shortest_path,
)
from ..witness import AdjacentPair
from .trace import branch

Bags = List[FrozenSet[int]]


class DistanceNotExceeding(GraphError):
    pass


class NotConnectedCore(GraphError):
    pass


@dataclass(frozen=True)
class Solution:
    """A split of T(u, v) into the part joining u's bag and the part joining v's bag."""

    s_u: FrozenSet[int]
    s_v: FrozenSet[int]

    def bags(self, g: Graph, u: int, v: int) -> Bags:
        return [
            frozenset((u,)),
            g.neighbors(u) | self.s_u,
            g.neighbors(v) | self.s_v,
            frozenset((v,)),
        ]

    @classmethod
    def from_bags(cls, g: Graph, u: int, v: int, bags: Sequence[Iterable[int]]) -> "Solution":
        return cls(frozenset(bags[1]) - g.neighbors(u), frozenset(bags[2]) - g.neighbors(v))


def t_set(g: Graph, u: int, v: int) -> FrozenSet[int]:
    return frozenset(g.vertices) - g.closed_neighborhood(u) - g.closed_neighborhood(v)


def is_solution(g: Graph, u: int, v: int, s_u: Iterable[int], s_v: Iterable[int]) -> bool:
    s_u, s_v = frozenset(s_u), frozenset(s_v)
    nu, nv = g.neighbors(u), g.neighbors(v)
    if g.has_edge(u, v) or nu & nv or s_u & s_v or (s_u | s_v) != t_set(g, u, v):
        return False
    return bool(nu) and bool(nv) and is_connected(g, nu | s_u) and is_connected(g, nv | s_v)


def contraction_rule(g: Graph, vs: Iterable[int], prefer: Sequence[int] = ()) -> Graph:
    """Contract all edges inside ``vs``; see :func:`contract_set` for which id survives."""
    return contract_set(g, vs, prefer)


def p3_suitability(g: Graph, u: int, v: int) -> bool:
    if g.has_edge(u, v):
        raise AdjacentPair(f"{u} and {v} are adjacent")
    rest = [x for x in g.vertices if x not in (u, v)]
    return bool(rest) and is_connected(g, rest)


def connected_cores(g: Graph, base: FrozenSet[int], pool: Iterable[int], max_size: int) -> Iterator[FrozenSet[int]]:
    """Subsets S of ``pool`` with |S| <= max_size and base | S connected, smallest first."""
    pool = sorted(pool)
    for size in range(0, min(max_size, len(pool)) + 1):
        for combo in combinations(pool, size):
            s = frozenset(combo)
            if is_connected(g, base | s):
                yield s


def _split_from_core(g: Graph, side: int, other: int, t: FrozenSet[int], core: FrozenSet[int]) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    n_other = g.neighbors(other)
    comps = components_of(g, (t - core) | n_other)
    holding = [c for c in comps if n_other & set(c)]
    if len(holding) != 1:
        return None
    d = frozenset(holding[0])
    return t - d, t & d


def alpha_constant_check(g: Graph, u: int, v: int, alpha: int) -> Optional[Solution]:
    """Search for a solution with a connecting core of at most ``alpha`` vertices.

    Cores on u's side are tried before cores on v's side. For a core S the
    opposite neighbourhood must sit in a single component D of
    G[(T minus S) plus N(other)]; then D's part of T goes to the other side
    and everything else in T joins the core's side.
    """
    if g.has_edge(u, v):
        raise AdjacentPair(f"{u} and {v} are adjacent")
    nu, nv = g.neighbors(u), g.neighbors(v)
    if not nu or not nv or nu & nv:
        return None
    t = t_set(g, u, v)
    for side, other in ((u, v), (v, u)):
        for core in connected_cores(g, g.neighbors(side), t, alpha):
            split = _split_from_core(g, side, other, t, core)
            if split is None:
                continue
            mine, theirs = split
            sol = Solution(mine, theirs) if side == u else Solution(theirs, mine)
            if is_solution(g, u, v, sol.s_u, sol.s_v):
                return sol
    return None


@dataclass
class BranchQueue:
    """Child instances whose disjunction is equivalent to the parent instance."""

    u: int
    v: int
    k: int
    items: List[Tuple[str, Graph]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def reduce_distance(g: Graph, u: int, v: int, k: int) -> BranchQueue:
    """One child per inner edge of the lexicographically first shortest u-v path.

    Valid whenever dist(u, v) >= k: a P_k witness with singleton ends crosses
    only k-1 bag boundaries, so some inner edge of the path lies inside a bag.
    """
    d = distance(g, u, v)
    if d < k:
        raise DistanceNotExceeding(f"distance {d} does not exceed {k - 1}")
    path = shortest_path(g, u, v)
    queue = BranchQueue(u, v, k)
    for a, b in zip(path[1:-2], path[2:-1]):
        queue.items.append((f"edge_{a}_{b}", contract_edge(g, a, b)))
    return queue


def closure(g: Graph, u: int, s_prime: Iterable[int], v: int) -> FrozenSet[int]:
    """Vertices cut off from v by N(u) plus ``s_prime``.

    Such vertices must share u's neighbour bag in every P_k witness (k >= 3)
    whose bag next to u contains N(u) and ``s_prime``.
    """
    s_prime = frozenset(s_prime)
    nu = g.neighbors(u)
    if not is_connected(g, nu | s_prime):
        raise NotConnectedCore("N(u) together with the core is not connected")
    cut = nu | s_prime | {u}
    rest = [x for x in g.vertices if x not in cut]
    out: set = set()
    for comp in components_of(g, rest):
        if v not in comp:
            out.update(comp)
    return frozenset(out)


def peel(g: Graph, u: int, v: int, core: Iterable[int]) -> Graph:
    """Contract u, N(u), the core and its closure into a single vertex kept as ``u``."""
    core = frozenset(core)
    block = {u} | g.neighbors(u) | core | closure(g, u, core, v)
    return contract_set(g, block, (u,))


def unpeel(peeled: Graph, u: int, bags: Bags) -> Bags:
    """Lift bags of a P_{k-1} witness of ``peeled`` (first bag {u}) to a P_k witness."""
    whole = peeled.origin(u)
    lifted = [frozenset((u,)), whole - {u}]
    lifted.extend(peeled.lift(b) for b in bags[1:])
    return lifted


def lift_bags(g: Graph, bags: Bags) -> Bags:
    return [g.lift(b) for b in bags]


def reverse(bags: Optional[Bags]) -> Optional[Bags]:
    return None if bags is None else list(reversed(bags))


class Context:
    """Per-call state: the class-specific solver table and a result memo."""

    def __init__(self, family) -> None:
        self.family = family
        self.memo: Dict[tuple, Optional[Bags]] = {}

    def solve(self, g: Graph, u: int, v: int, k: int, node: int = 0) -> Optional[Bags]:
        """P_k-suitability of (g, u, v); bags come back in g's own vertex ids."""
        g = g.fresh()
        key = (g.key(), u, v, k)
        if key in self.memo:
            return self.memo[key]
        if g.has_edge(u, v) or k < 4 or k > self.family.kmax or distance(g, u, v) < k - 1:
            res = None
        elif k == 4:
            res = self.family.p4(self, g, u, v, node)
        else:
            res = self.family.pk(self, g, u, v, k, node)
        if res is not None:
            from ..patterns import path
            from ..witness import verify_witness

            check = verify_witness(g, path(k), res)
            assert check, f"solver produced an invalid witness: {check.detail}"
        self.memo[key] = res
        return res

    def try_peels(self, g: Graph, u: int, v: int, k: int, cores: Iterable[FrozenSet[int]], node: int, label: str) -> Optional[Bags]:
        seen = set()
        for core in cores:
            try:
                child = peel(g, u, v, core)
            except NotConnectedCore:
                continue
            sig = (child.key(), u)
            if sig in seen:
                continue
            seen.add(sig)
            step = branch(node, f"{label}:{'-'.join(map(str, sorted(core))) or 'none'}", child, u, v, k - 1)
            bags = self.solve(child, u, v, k - 1, step)
            if bags is not None:
                return unpeel(child, u, bags)
        return None

    def try_peel_other_side(self, g: Graph, u: int, v: int, k: int, cores, node: int, label: str) -> Optional[Bags]:
        return reverse(self.try_peels(g, v, u, k, cores, node, label))

    def try_reductions(self, g: Graph, u: int, v: int, k: int, node: int) -> Optional[Bags]:
        seen = set()
        for label, child in reduce_distance(g, u, v, k):
            if child.key() in seen:
                continue
            seen.add(child.key())
            step = branch(node, f"reduce:{label}", child, u, v, k)
            bags = self.solve(child, u, v, k, step)
            if bags is not None:
                return lift_bags(child, bags)
        return None


def normalize_ends(g: Graph, u: int, v: int) -> Graph:
    """Apply the contraction rule to N(u) and to N(v)."""
    g = contraction_rule(g, g.neighbors(u), sorted(g.neighbors(u)))
    return contraction_rule(g, g.neighbors(v), sorted(g.neighbors(v)))


def layer_sets(g: Graph, u: int, v: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    return bfs_distances(g, u), bfs_distances(g, v)
