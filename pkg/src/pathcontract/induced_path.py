"""Longest induced path by depth-first extension with branch and bound."""

from __future__ import annotations

from typing import List, Optional, Sequence

from .graph import Graph, GraphError, NotInClass, NotLinearForest, contains_induced, is_linear_forest
from .patterns import path

DEFAULT_EXHAUSTIVE_BOUND = 16


class CapTooLargeForExhaustive(GraphError):
    pass


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq):
        return False
    for i, a in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if g.has_edge(a, seq[j]) != (j == i + 1):
                return False
    return True


def longest_induced_path(g: Graph, cap: Optional[int] = None, bound: int = DEFAULT_EXHAUSTIVE_BOUND) -> List[int]:
    """A longest induced path as a vertex list.

    With ``cap`` only paths of at most ``cap`` vertices are considered. Among
    maximum paths the lexicographically smallest vertex sequence is returned.
    """
    if cap is None and g.n > bound:
        raise CapTooLargeForExhaustive(f"{g.n} vertices exceed the uncapped bound {bound}; pass a cap")
    if g.n == 0:
        return []
    limit = g.n if cap is None else min(cap, g.n)
    if limit <= 0:
        return []
    gv = g.vertices
    idx = {v: i for i, v in enumerate(gv)}
    adj = [0] * g.n
    for v in gv:
        m = 0
        for x in g.neighbors(v):
            m |= 1 << idx[x]
        adj[idx[v]] = m

    best: List[int] = [0]
    cur: List[int] = []

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def rec(last: int, free: int) -> bool:
        # free: vertices not on the path and not adjacent to any path vertex but the last
        if len(cur) > len(best):
            best[:] = cur
            if len(best) == limit:
                return True
        if len(cur) == limit:
            return False
        if len(cur) + popcount(free) <= len(best):
            return False
        cand = free & adj[last]
        nxt_free = free & ~adj[last]
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            cur.append(c)
            if rec(c, nxt_free & ~low):
                return True
            cur.pop()
        return False

    full = (1 << g.n) - 1
    for s in range(g.n):
        if len(best) >= limit:
            break
        cur[:] = [s]
        if rec(s, full & ~(1 << s)):
            break
    result = [gv[i] for i in best]
    assert is_induced_path(g, result)
    return result


def path_cap_for(h: Graph) -> int:
    """Smallest k such that h is an induced subgraph of P_k."""
    if not is_linear_forest(h):
        raise NotLinearForest("pattern is not a linear forest")
    if h.n == 0:
        return 0
    k = h.n
    while contains_induced(path(k), h, limit=max(10, h.n)) is None:
        k += 1
    return k


def lip_h_free(g: Graph, h: Graph) -> List[int]:
    """Longest induced path of an h-free graph, h a linear forest.

    An h-free graph has no induced P_k for the smallest k with h induced in
    P_k, so the search can stop at k-1 vertices.
    """
    k = path_cap_for(h)
    if contains_induced(g, h, limit=max(10, h.n)) is not None:
        raise NotInClass("graph contains the forbidden pattern")
    return longest_induced_path(g, cap=k - 1)
