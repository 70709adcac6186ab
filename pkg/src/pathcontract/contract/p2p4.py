"""P_k-suitability on (P2+P4)-free graphs.

The P4 solver runs in phases:

1. an induced P4 inside T either has a vertex-disjoint partner (then both
   cover N(u) and N(v) and a solution is immediate) or is branched away, so
   T becomes P4-free;
2. a 7-constant check, after which no solution has edges on both sides;
3. a search for solutions whose u-side is independent: guess two covering
   vertices to identify the shared neighbour w_u, clean up T, branch until
   both sides are independent, identify w_v the same way, force placements
   and finish with a bipartite matching;
4. the same search with u and v exchanged.

Every graph below is derived from the solver's input graph by contractions,
so its origin map lifts bags straight back to input vertices.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, product
from typing import FrozenSet, Iterator, List, Optional, Set, Tuple

from ..graph import Graph, components_of, contains_induced, contract_edge, distance, is_bipartite
from ..matching import BipartiteGraph, maximum_matching
from ..patterns import P2_P4, complete, disjoint_union, path
from .common import (
    Bags,
    Context,
    Solution,
    alpha_constant_check,
    contraction_rule,
    is_solution,
    normalize_ends,
    reverse,
    t_set,
)
from .trace import branch

NAME = "p2p4"
PATTERN = P2_P4
ALPHA = 7
kmax = 6

_P4 = path(4)
_K3_P1 = disjoint_union(complete(3), path(1))


class _Found(Exception):
    def __init__(self, bags: Bags) -> None:
        super().__init__("solution found")
        self.bags = bags


def _lifted(h: Graph, u: int, v: int, sol: Solution) -> Bags:
    return [h.lift(b) for b in sol.bags(h, u, v)]


def _into(h: Graph, x: int, vs, keep: Optional[int] = None) -> Graph:
    """Contraction rule on N(x) plus ``vs``; ``keep`` names the surviving neighbour id."""
    nx = h.neighbors(x)
    prefer = ([keep] if keep is not None else []) + sorted(nx)
    return contraction_rule(h, nx | set(vs), prefer)


def _constant(h: Graph, u: int, v: int, alpha: int) -> None:
    sol = alpha_constant_check(h, u, v, alpha)
    if sol is not None:
        raise _Found(_lifted(h, u, v, sol))


# Phase 1


def _connectors(h: Graph, a: int, side: int, t: FrozenSet[int]) -> List[Tuple[int, ...]]:
    """Inner vertices of induced paths in G[T] from ``a`` towards N(side).

    Only the last inner vertex may touch N(side); at most four inner vertices,
    since a shortest path into N(side) inside a P7-free graph has at most six.
    """
    ns = h.neighbors(side)
    out: List[Tuple[int, ...]] = []

    def rec(seq: List[int]) -> None:
        last = seq[-1]
        for x in sorted(h.neighbors(last) & t):
            if x in seq or any(h.has_edge(x, y) for y in seq[:-1]):
                continue
            if h.neighbors(x) & ns:
                out.append(tuple(seq[1:] + [x]))
            elif len(seq) < 4:
                rec(seq + [x])

    rec([a])
    return out


def _two_sided_fill(h: Graph, u: int, v: int, a: Set[int], b: Set[int]) -> Solution:
    """Grow N(u)+a and N(v)+b through T by a joint breadth-first search."""
    t = t_set(h, u, v)
    owner = {x: u for x in h.neighbors(u) | a}
    owner.update({x: v for x in h.neighbors(v) | b})
    queue = deque(sorted(owner))
    while queue:
        x = queue.popleft()
        for y in sorted(h.neighbors(x) & t):
            if y not in owner:
                owner[y] = owner[x]
                queue.append(y)
    s_u = frozenset(x for x in t if owner.get(x) == u)
    return Solution(s_u, t - s_u)


def _branching_one(ctx: Context, h: Graph, u: int, v: int, a: List[int], i: int, node: int) -> Optional[Bags]:
    if i == len(a):
        t = t_set(h, u, v)
        assert contains_induced(h.induced(t), _P4) is None, "T still contains an induced P4"
        return _after_phase_one(ctx, h, u, v, node)
    ai = a[i]
    t = t_set(h, u, v)
    if ai not in t:
        return _branching_one(ctx, h, u, v, a, i + 1, node)
    for side, tag in ((u, "u"), (v, "v")):
        if h.neighbors(ai) & h.neighbors(side):
            options: List[Tuple[int, ...]] = [()]
        else:
            options = _connectors(h, ai, side, t)
        for inner in options:
            child = _into(h, side, {ai, *inner})
            step = branch(node, f"I:{ai}:{tag}:{'-'.join(map(str, inner)) or 'direct'}", child, u, v, 4)
            res = _branching_one(ctx, child, u, v, a, i + 1, step)
            if res is not None:
                return res
    return None


def _after_phase_one(ctx: Context, h: Graph, u: int, v: int, node: int) -> Optional[Bags]:
    sol = alpha_constant_check(h, u, v, ALPHA)
    if sol is not None:
        return _lifted(h, u, v, sol)
    res = u_feasibility(h, u, v, node)
    if res is not None:
        return res
    return reverse(u_feasibility(h, v, u, node))


def p4(ctx: Context, g: Graph, u: int, v: int, node: int) -> Optional[Bags]:
    h = normalize_ends(g, u, v)
    t = t_set(h, u, v)
    emb = contains_induced(h.induced(t), _P4)
    if emb is None:
        return _after_phase_one(ctx, h, u, v, node)
    a = [emb[i] for i in range(4)]
    other = contains_induced(h.induced(t - set(a)), _P4)
    if other is not None:
        sol = _two_sided_fill(h, u, v, set(a), set(other.values()))
        if is_solution(h, u, v, sol.s_u, sol.s_v):
            return _lifted(h, u, v, sol)
    return _branching_one(ctx, h, u, v, a, 0, node)


# Phase 3, run with (u, v) or with the roles exchanged


def u_feasibility(h: Graph, u: int, v: int, node: int) -> Optional[Bags]:
    """Search for a solution whose u-side is an independent set.

    Returns bags ordered from u to v, or None.
    """
    t = t_set(h, u, v)
    nu = h.neighbors(u)
    for s, s2 in combinations(sorted(t), 2):
        if h.has_edge(s, s2):
            continue
        a, b = h.neighbors(s) & nu, h.neighbors(s2) & nu
        if not (a - b) or not (b - a) or not (a & b) or (a | b) == nu:
            continue
        wu = min(a & b)
        child = _into(h, u, {s, s2}, wu)
        step = branch(node, f"II:{u}:{s}-{s2}", child, u, v, 4)
        t2 = t_set(child, u, v) - child.neighbors(wu)
        try:
            _after_branching_two(child, u, v, wu, frozenset(t2), step)
        except _Found as found:
            return found.bags
    return None


def _normalize(h: Graph, u: int, v: int, t2: FrozenSet[int]) -> Tuple[Graph, FrozenSet[int]]:
    """Keep T2 independent and anticomplete to N(v) by contracting."""
    while True:
        t = t_set(h, u, v)
        t2 = t2 & t
        nv = h.neighbors(v)
        hits = {x for x in t2 if h.neighbors(x) & nv}
        if hits:
            h = _into(h, v, hits)
            continue
        groups = [c for c in components_of(h, t2) if len(c) > 1]
        if groups:
            h = h.merge((c[0], c) for c in groups)
            continue
        return h, t2


def _after_branching_two(h: Graph, u: int, v: int, wu: int, t2: FrozenSet[int], node: int) -> None:
    h, t2 = _normalize(h, u, v, t2)
    _constant(h, u, v, ALPHA)
    h, t2 = _drop_triangle_plus_point(h, u, v, wu, t2)
    t1 = sorted(t_set(h, u, v) - t2)
    for t in t1:
        nb = h.neighbors(t) & (t_set(h, u, v) - t2)
        child = _into(h, u, {t}, wu)
        child, ct2 = _normalize(child, u, v, t2 | nb)
        step = branch(node, f"III:{t}", child, u, v, 4)
        _constant(child, u, v, ALPHA)
        for inst, inst_node in _phase_3b(child, u, v, wu, ct2, step):
            _phase_3c(inst, u, v, wu, inst_node)


def _drop_triangle_plus_point(h: Graph, u: int, v: int, wu: int, t2: FrozenSet[int]) -> Tuple[Graph, FrozenSet[int]]:
    """Remove induced K3+P1 from G[T]: the isolated vertex is never needed on either side."""
    while True:
        t = t_set(h, u, v)
        emb = contains_induced(h.induced(t), _K3_P1)
        if emb is None:
            return h, t2
        y = emb[3]
        if h.neighbors(y) & h.neighbors(u):
            h = _into(h, u, {y}, wu)
        else:
            h = contract_edge(h, min(h.neighbors(y)), y)
        h, t2 = _normalize(h, u, v, t2)


def _nontrivial(h: Graph, vs) -> List[List[int]]:
    return [c for c in components_of(h, vs) if len(c) > 1]


def _phase_3b(h: Graph, u: int, v: int, wu: int, t2: FrozenSet[int], node: int) -> Iterator[Tuple[Graph, int]]:
    """Instances in which any solution with independent u-side may be taken fully independent."""
    t = t_set(h, u, v)
    big = _nontrivial(h, t)
    if len(big) != 1:
        yield h, node
        return
    d1 = set(big[0])
    outside = [x for x in t2 if x not in d1]
    if outside:
        if any(not h.neighbors(x) & h.neighbors(u) for x in outside):
            return
        h = _into(h, u, outside, wu)
        t2 = t2 & t_set(h, u, v)
    blocks = components_of(h, (t_set(h, u, v) - t2) & d1)
    if len(blocks) != 1:
        yield from _settle_t2(h, u, v, wu, t2, node)
        return
    block = blocks[0]
    for t in block:
        nb = h.neighbors(t) & t_set(h, u, v)
        child = _into(h, u, {t}, wu)
        child, ct2 = _normalize(child, u, v, t2 | nb)
        step = branch(node, f"IV:{t}", child, u, v, 4)
        yield from _settle_t2(child, u, v, wu, ct2, step)
        rest = sorted((t_set(child, u, v) - ct2) & set(block))
        for t_other in rest:
            if not child.neighbors(t_other) & child.neighbors(v):
                continue
            grand = _into(child, v, {t_other})
            grand, gt2 = _normalize(grand, u, v, ct2)
            gstep = branch(step, f"IV:{t}:{t_other}", grand, u, v, 4)
            yield from _settle_t2(grand, u, v, wu, gt2, gstep)


def _settle_t2(h: Graph, u: int, v: int, wu: int, t2: FrozenSet[int], node: int) -> Iterator[Tuple[Graph, int]]:
    """Empty T2: every T2 vertex needs a T1 vertex of S_v next to it."""
    t = t_set(h, u, v)
    lone = [x for x in t2 if not h.neighbors(x) & t]
    if lone:
        if any(not h.neighbors(x) & h.neighbors(u) for x in lone):
            return
        h = _into(h, u, lone, wu)
        t2 = t2 & t_set(h, u, v)
        t = t_set(h, u, v)
    if not t2:
        yield from _branching_six(h, u, v, wu, node)
        return
    holders = set()
    for comp in components_of(h, t):
        if t2 & set(comp):
            holders.update(x for x in comp if x not in t2)
    if len(holders) == 1:
        (star,) = holders
        if not h.neighbors(star) & h.neighbors(v):
            return
        child = _into(h, v, set(t2) | {star})
        yield from _branching_six(child, u, v, wu, branch(node, f"V:{star}", child, u, v, 4))
        return
    for x in sorted(holders):
        if not h.neighbors(x) & h.neighbors(v):
            continue
        child = _into(h, v, {x})
        child, ct2 = _normalize(child, u, v, t2)
        step = branch(node, f"V:{x}", child, u, v, 4)
        if ct2:
            continue
        yield from _branching_six(child, u, v, wu, step)


def _branching_six(h: Graph, u: int, v: int, wu: int, node: int) -> Iterator[Tuple[Graph, int]]:
    big = _nontrivial(h, t_set(h, u, v))
    if len(big) != 1:
        yield h, node
        return
    block = big[0]
    for t in block:
        nb = h.neighbors(t) & t_set(h, u, v)
        child = _into(h, u, {t}, wu)
        child, ct2 = _normalize(child, u, v, frozenset(nb))
        step = branch(node, f"VI:{t}", child, u, v, 4)
        if not ct2:
            yield child, step
            continue
        for t_other in sorted((t_set(child, u, v) - ct2) & set(block)):
            if not child.neighbors(t_other) & child.neighbors(v):
                continue
            grand = _into(child, v, {t_other})
            grand, gt2 = _normalize(grand, u, v, ct2)
            if not gt2:
                yield grand, branch(step, f"VI:{t}:{t_other}", grand, u, v, 4)


# Phase 3c and 3d: private solutions


class _Private:
    """Bookkeeping while both sides are assumed independent.

    ``base`` is the graph at the start of the phase; T vertices are never
    merged with each other here, so they keep their ids, and the sets below
    record which of them were pushed to each side.
    """

    def __init__(self, base: Graph, u: int, v: int, wu: int, wv: int) -> None:
        self.base = base
        self.u, self.v, self.wu, self.wv = u, v, wu, wv
        self.sent = {u: set(), v: set()}

    def push(self, h: Graph, side: int, vs) -> Graph:
        vs = set(vs)
        keep = self.wu if side == self.u else self.wv
        h = _into(h, side, vs, keep)
        sent = self.sent[side]
        sent |= vs
        if any(self.base.has_edge(a, b) for a, b in combinations(sorted(sent), 2)):
            raise _Discard()
        _constant(h, self.u, self.v, 1)
        return h


class _Discard(Exception):
    pass


def _phase_3c(h: Graph, u: int, v: int, wu: int, node: int) -> None:
    t = t_set(h, u, v)
    nv = h.neighbors(v)
    for s, s2 in combinations(sorted(t), 2):
        if h.has_edge(s, s2):
            continue
        a, b = h.neighbors(s) & nv, h.neighbors(s2) & nv
        if not (a - b) or not (b - a) or not (a & b) or (a | b) == nv:
            continue
        wv = min(a & b)
        book = _Private(h, u, v, wu, wv)
        step = branch(node, f"VII:{s}-{s2}", None, u, v, 4)
        try:
            child = book.push(h, v, {s, s2})
            _private_search(child, book, step)
        except _Discard:
            continue


def _private_search(h: Graph, book: _Private, node: int) -> None:
    u, v, wu, wv = book.u, book.v, book.wu, book.wv
    # every T vertex must see both shared neighbours
    changed = True
    while changed:
        changed = False
        for z in sorted(t_set(h, u, v)):
            au, av = h.has_edge(z, wu), h.has_edge(z, wv)
            if au and av:
                continue
            if not au and not av:
                return
            h = book.push(h, u if au else v, {z})
            changed = True
            break
    t = t_set(h, u, v)
    if not is_bipartite(h.induced(t)):
        return
    parts = []
    for comp in _nontrivial(h, t):
        sub = h.induced(comp)
        ys, zs = _sides_of(sub)
        if any(not h.has_edge(y, z) for y in ys for z in zs):
            return
        parts.append((ys, zs))
    if len(parts) > 3:
        return
    for flips in product((0, 1), repeat=len(parts)):
        to_u: Set[int] = set()
        to_v: Set[int] = set()
        for (ys, zs), f in zip(parts, flips):
            to_u |= ys if f == 0 else zs
            to_v |= zs if f == 0 else ys
        step = branch(node, "VIII:" + "".join(map(str, flips)), None, u, v, 4)
        saved = {side: set(s) for side, s in book.sent.items()}
        try:
            child = h
            if to_u:
                child = book.push(child, u, to_u)
            if to_v:
                child = book.push(child, v, to_v)
            _finish(child, book, step)
        except _Discard:
            pass
        book.sent = saved


def _sides_of(g: Graph) -> Tuple[Set[int], Set[int]]:
    colour = {}
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
    return {x for x, c in colour.items() if c == 0}, {x for x, c in colour.items() if c == 1}


def _covers(h: Graph, vs, targets) -> bool:
    return all(h.neighbors(w) & vs for w in targets)


def _finish(h: Graph, book: _Private, node: int) -> None:
    u, v, wu, wv = book.u, book.v, book.wu, book.wv
    changed = True
    while changed:
        changed = False
        t = t_set(h, u, v)
        for side, other, w_side in ((u, v, wu), (v, u, wv)):
            # a neighbour seen by a single T vertex pins that vertex to its side
            for w in sorted(h.neighbors(side) - {w_side}):
                seen = h.neighbors(w) & t
                if not seen:
                    raise _Discard()
                if len(seen) == 1:
                    h = book.push(h, side, seen)
                    changed = True
                    break
            if changed:
                break
            # a T vertex seeing all of N(side) is a 1-constant core or belongs to the other side
            for z in sorted(t):
                if h.neighbors(side) <= h.neighbors(z):
                    rest = t - {z}
                    if _covers(h, rest, h.neighbors(other)):
                        sol = Solution(frozenset((z,)), rest) if side == u else Solution(rest, frozenset((z,)))
                        if is_solution(h, u, v, sol.s_u, sol.s_v):
                            raise _Found(_lifted(h, u, v, sol))
                    h = book.push(h, other, {z})
                    changed = True
                    break
            if changed:
                break
            # s cannot be a covering vertex on this side
            ns = h.neighbors(side)
            for s in sorted(t):
                for t_other in sorted(t - {s}):
                    both = ns & h.neighbors(s) & h.neighbors(t_other) - {w_side}
                    only_s = (ns & h.neighbors(s)) - h.neighbors(t_other)
                    neither = ns - h.neighbors(s) - h.neighbors(t_other)
                    if both and only_s and neither:
                        h = book.push(h, other, {s})
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    _constant(h, u, v, 2)
    sol = _match(h, u, v, wu, wv)
    if sol is not None:
        branch(node, "matching", None, u, v, 4)
        raise _Found(_lifted(h, u, v, sol))


def _match(h: Graph, u: int, v: int, wu: int, wv: int) -> Optional[Solution]:
    """Star cover of the private neighbours by distinct T vertices."""
    t = t_set(h, u, v)
    left = []
    for side, w_side in ((u, wu), (v, wv)):
        classes = {}
        for w in sorted(h.neighbors(side) - {w_side}):
            classes.setdefault(h.neighbors(w) & t, w)
        left.extend((side, rep) for rep in classes.values())
    edges = [((side, w), z) for side, w in left for z in h.neighbors(w) & t]
    m = maximum_matching(BipartiteGraph.build(left, t, edges))
    if len(m) != len(left):
        return None
    s_u = frozenset(z for (side, _), z in m.items() if side == u)
    sol = Solution(s_u, t - s_u)
    return sol if is_solution(h, u, v, sol.s_u, sol.s_v) else None


# longer paths


def pk(ctx: Context, g: Graph, u: int, v: int, k: int, node: int) -> Optional[Bags]:
    h = normalize_ends(g, u, v)
    nu = h.neighbors(u)
    if len(nu) == 1:
        return ctx.try_peels(h, u, v, k, [frozenset()], node, "single_u")
    if k == 5 and distance(h, u, v) > 4:
        return ctx.try_reductions(h, u, v, k, node)
    t = t_set(h, u, v)
    if k == 5:
        # vertices two steps from both ends are forced into the middle bag
        from ..graph import bfs_distances

        du, dv = bfs_distances(h, u), bfs_distances(h, v)
        t = frozenset(x for x in t if not (du.get(x) == 2 and dv.get(x) == 2))
    cores = (frozenset((s,)) for s in sorted(t) if nu <= h.neighbors(s))
    return ctx.try_peels(h, u, v, k, cores, node, "connector")
