"""Hardness gadgets built from hypergraphs, plus small brute-force checkers.

Vertex numbering of the base gadget for a hypergraph with m elements and n
hyperedges: elements q_i are 0..m-1, hyperedge vertices S_j are m..m+n-1,
their copies S'_j are m+n..m+2n-1, then t1 = m+2n and t2 = m+2n+1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Tuple

from .formats import Hypergraph
from .graph import Graph, GraphError, line_graph, subdivide_all_edges

MAX_COLOURING_ELEMENTS = 20
MAX_HAMPATH_VERTICES = 10


class TooManyElements(GraphError):
    pass


class TooLarge(GraphError):
    pass


class OddP(GraphError):
    pass


@dataclass(frozen=True)
class TwoColouring:
    q1: FrozenSet[int]
    q2: FrozenSet[int]


def is_two_colouring(h: Hypergraph, q1, q2) -> bool:
    q1, q2 = frozenset(q1), frozenset(q2)
    if not q1 or not q2 or q1 & q2 or q1 | q2 != frozenset(range(h.m)):
        return False
    return all(e & q1 and e & q2 for e in h.hyperedges)


def two_colouring(h: Hypergraph, bound: int = MAX_COLOURING_ELEMENTS) -> Optional[TwoColouring]:
    """First valid colouring, reading colour vectors lexicographically with element 0 in q1."""
    if h.m > bound:
        raise TooManyElements(f"{h.m} elements exceed the exhaustive bound {bound}")
    for tail in product((0, 1), repeat=h.m - 1):
        colours = (0,) + tail
        q1 = frozenset(i for i, c in enumerate(colours) if c == 0)
        q2 = frozenset(i for i, c in enumerate(colours) if c == 1)
        if is_two_colouring(h, q1, q2):
            return TwoColouring(q1, q2)
    return None


@dataclass
class Gadget:
    """A generated graph together with role names for every vertex."""

    graph: Graph
    roles: Dict[int, str]
    q: List[int]
    s: List[int]
    s_copy: List[int]
    t1: int
    t2: int
    # internal vertices of subdivided base edges, keyed by the base edge (a, b)
    # with a < b and listed from a towards b
    chains: Dict[Tuple[int, int], List[int]] = field(default_factory=dict)
    tbar1: Optional[int] = None
    tbar2: Optional[int] = None
    pendant1: List[int] = field(default_factory=list)
    pendant2: List[int] = field(default_factory=list)


def _require_normalized(h: Hypergraph) -> Hypergraph:
    if not h.is_normalized():
        raise GraphError("hypergraph must be normalized (last hyperedge equal to all elements)")
    return h


def _base(h: Hypergraph):
    m, n = h.m, h.n
    q = list(range(m))
    s = [m + j for j in range(n)]
    sc = [m + n + j for j in range(n)]
    t1, t2 = m + 2 * n, m + 2 * n + 1
    roles = {}
    for i in q:
        roles[i] = f"q{i}"
    for j in range(n):
        roles[s[j]] = f"S{j}"
        roles[sc[j]] = f"Sc{j}"
    roles[t1] = "t1"
    roles[t2] = "t2"
    edges = []
    for j, e in enumerate(h.hyperedges):
        for i in sorted(e):
            edges.append((q[i], s[j]))
            edges.append((q[i], sc[j]))
    for j in range(n):
        for l in range(n):
            edges.append((s[j], sc[l]))
    for a in range(m):
        for b in range(a + 1, m):
            edges.append((a, b))
    for j in range(n):
        edges.append((t1, s[j]))
        edges.append((t2, sc[j]))
    return q, s, sc, t1, t2, roles, edges


def build_gh(h: Hypergraph) -> Gadget:
    h = _require_normalized(h)
    q, s, sc, t1, t2, roles, edges = _base(h)
    g = Graph.from_edges(range(h.m + 2 * h.n + 2), edges)
    return Gadget(g, roles, q, s, sc, t1, t2)


def build_gh_prime(h: Hypergraph) -> Gadget:
    """The base gadget with t1 and t2 made adjacent."""
    base = build_gh(h)
    base.graph = base.graph.add_edges([(base.t1, base.t2)])
    return base


def build_bar_gh(h: Hypergraph, p: int) -> Gadget:
    """Subdivided gadget: bipartite, girth at least p, extremal pair at distance 2p-1."""
    if p < 4 or p % 2:
        raise OddP(f"p must be even and at least 4, got {p}")
    h = _require_normalized(h)
    q, s, sc, t1, t2, roles, edges = _base(h)
    qs, ss, scs = set(q), set(s), set(sc)
    sn, scn = s[-1], sc[-1]
    verts = list(range(h.m + 2 * h.n + 2))
    nxt = len(verts)
    new_edges = []
    chains: Dict[Tuple[int, int], List[int]] = {}
    for a, b in sorted({(min(x, y), max(x, y)) for x, y in edges}):
        if (a, b) == (sn, scn) or t1 in (a, b) or t2 in (a, b):
            internal = 0
        elif a in ss and b in scs:
            internal = p - 2
        elif a in qs and b in scs:
            internal = p - 2
        elif a in qs and (b in qs or b in ss):
            internal = p - 1
        else:
            raise AssertionError(f"unexpected base edge {a}-{b}")
        chain = []
        for k in range(internal):
            verts.append(nxt)
            roles[nxt] = f"sub_{roles[a]}_{roles[b]}_{k}"
            chain.append(nxt)
            nxt += 1
        if chain:
            chains[(a, b)] = chain
        walk = [a] + chain + [b]
        new_edges.extend(zip(walk, walk[1:]))
    pendants = []
    for idx, t in ((1, t1), (2, t2)):
        walk = [t]
        for k in range(p - 2):
            verts.append(nxt)
            roles[nxt] = f"pend{idx}_{k}"
            walk.append(nxt)
            nxt += 1
        roles[walk[-1]] = f"tbar{idx}"
        new_edges.extend(zip(walk, walk[1:]))
        pendants.append(walk)
    g = Graph.from_edges(verts, new_edges)
    return Gadget(
        g, roles, q, s, sc, t1, t2, chains,
        tbar1=pendants[0][-1], tbar2=pendants[1][-1],
        pendant1=pendants[0], pendant2=pendants[1],
    )


def _split(gadget: Gadget, near: int, far: int) -> Tuple[List[int], List[int]]:
    """Internal vertices of the chain near..far, split into the near half and the far half.

    The near side gets the larger half; for an even count this puts the cut
    right after the middle-most vertex closest to ``near``.
    """
    key = (min(near, far), max(near, far))
    chain = list(gadget.chains.get(key, []))
    if key[0] != near:
        chain.reverse()
    cut = (len(chain) + 1) // 2
    return chain[:cut], chain[cut:]


def bar_gh_witness(gadget: Gadget, h: Hypergraph, colouring: TwoColouring) -> List[FrozenSet[int]]:
    """Bags of a P_{2p} witness in the subdivided gadget, built from a 2-colouring.

    Every chain whose two ends end up on different sides is cut in the middle.
    """
    q1, q2 = colouring.q1, colouring.q2
    left: set = set()
    right: set = set()
    sn, scn = gadget.s[-1], gadget.s_copy[-1]
    left.update(gadget.s)
    right.update(gadget.s_copy)
    left.update(gadget.q[i] for i in q1)
    right.update(gadget.q[i] for i in q2)
    qs = set(gadget.q)
    for (a, b), _ in gadget.chains.items():
        a_left = a in left
        b_left = b in left
        if a_left and b_left:
            left.update(gadget.chains[(a, b)])
        elif not a_left and not b_left:
            right.update(gadget.chains[(a, b)])
        else:
            near, far = (a, b) if a_left else (b, a)
            near_half, far_half = _split(gadget, near, far)
            left.update(near_half)
            right.update(far_half)
    assert sn in left and scn in right and not (qs - left - right)
    bags = [frozenset([x]) for x in reversed(gadget.pendant1)]
    bags.append(frozenset(left))
    bags.append(frozenset(right))
    bags.extend(frozenset([x]) for x in gadget.pendant2)
    return bags


def gh_witness(gadget: Gadget, colouring: TwoColouring) -> List[FrozenSet[int]]:
    """P4 bags {t1}, S plus Q1, S' plus Q2, {t2} for the base gadget."""
    left = frozenset(gadget.s) | frozenset(gadget.q[i] for i in colouring.q1)
    right = frozenset(gadget.s_copy) | frozenset(gadget.q[i] for i in colouring.q2)
    return [frozenset([gadget.t1]), left, right, frozenset([gadget.t2])]


def hampath_bruteforce(g: Graph, bound: int = MAX_HAMPATH_VERTICES) -> Optional[List[int]]:
    """Lexicographically first Hamiltonian path, by DFS."""
    if g.n > bound:
        raise TooLarge(f"{g.n} vertices exceed the brute-force bound {bound}")
    if g.n == 0:
        return []
    order: List[int] = []
    used: set = set()

    def rec() -> bool:
        if len(order) == g.n:
            return True
        for x in sorted(g.neighbors(order[-1]) - used):
            order.append(x)
            used.add(x)
            if rec():
                return True
            order.pop()
            used.discard(x)
        return False

    for start in g.vertices:
        order[:] = [start]
        used.clear()
        used.add(start)
        if rec():
            return list(order)
    return None


def hampath_to_lip_subdivision(g: Graph) -> Graph:
    return subdivide_all_edges(g, 1)


def hampath_to_lip_linegraph(g: Graph) -> Graph:
    return line_graph(g)[0]
