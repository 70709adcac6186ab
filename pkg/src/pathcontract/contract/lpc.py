"""Public entry points: per-class suitability and longest path contractibility."""

from __future__ import annotations

import re
from types import SimpleNamespace
from typing import Optional, Tuple

from ..graph import Graph, GraphError, NotConnected, NotInClass, UnknownVertex, bfs_distances, contains_induced, is_connected
from ..witness import AdjacentPair
from . import p1p2p3, p1p5, p2p4
from .common import Bags, Context, Solution, p3_suitability
from .sp1p4 import Family


def _module_family(mod) -> SimpleNamespace:
    return SimpleNamespace(name=mod.NAME, pattern=mod.PATTERN, kmax=mod.kmax, p4=mod.p4, pk=mod.pk)


_FIXED = {mod.NAME: _module_family(mod) for mod in (p2p4, p1p2p3, p1p5)}
_SP1P4 = re.compile(r"^(?:sp1p4:(\d+)|(\d+)p1p4)$")


def family_for(tag: str):
    """Solver table for a class tag: p2p4, p1p2p3, p1p5, sp1p4:<s> or <s>p1p4."""
    key = tag.strip().lower().replace("+", "").replace("-free", "")
    if key in _FIXED:
        return _FIXED[key]
    m = _SP1P4.match(key)
    if m:
        return Family(int(m.group(1) or m.group(2)))
    raise ValueError(f"unknown graph class {tag!r}")


def require_member(g: Graph, family) -> None:
    if contains_induced(g, family.pattern) is not None:
        raise NotInClass(f"graph is not {family.name}-free")


def _check_pair(g: Graph, u: int, v: int) -> None:
    for x in (u, v):
        if x not in g.vertices:
            raise UnknownVertex(f"vertex {x} not in graph")
    if g.has_edge(u, v):
        raise AdjacentPair(f"{u} and {v} are adjacent")


def suitability(g: Graph, u: int, v: int, k: int, class_tag: str, check_class: bool = True) -> Optional[Bags]:
    """A P_k witness whose end bags are {u} and {v}, or None.

    Raises NotInClass, NotConnected or AdjacentPair on bad input.
    """
    fam = family_for(class_tag)
    if check_class:
        require_member(g, fam)
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    _check_pair(g, u, v)
    if k == 3:
        rest = frozenset(g.vertices) - {u, v}
        return [frozenset((u,)), rest, frozenset((v,))] if p3_suitability(g, u, v) else None
    if k < 3:
        raise ValueError("k must be at least 3")
    return Context(fam).solve(g, u, v, k)


def _p4_solution(g: Graph, u: int, v: int, class_tag: str) -> Optional[Solution]:
    bags = suitability(g, u, v, 4, class_tag)
    return None if bags is None else Solution.from_bags(g, u, v, bags)


def p4_suitability_p2p4(g, u, v):
    return _p4_solution(g, u, v, "p2p4")


def p5_suitability_p2p4(g, u, v):
    return suitability(g, u, v, 5, "p2p4")


def p6_suitability_p2p4(g, u, v):
    return suitability(g, u, v, 6, "p2p4")


def p4_suitability_p1p2p3(g, u, v):
    return _p4_solution(g, u, v, "p1p2p3")


def p5_suitability_p1p2p3(g, u, v):
    return suitability(g, u, v, 5, "p1p2p3")


def p6_suitability_p1p2p3(g, u, v):
    return suitability(g, u, v, 6, "p1p2p3")


def p7_suitability_p1p2p3(g, u, v):
    return suitability(g, u, v, 7, "p1p2p3")


def p4_suitability_p1p5(g, u, v):
    return _p4_solution(g, u, v, "p1p5")


def p5_suitability_p1p5(g, u, v):
    return suitability(g, u, v, 5, "p1p5")


def p6_suitability_p1p5(g, u, v):
    return suitability(g, u, v, 6, "p1p5")


def _small_paths(g: Graph) -> Tuple[int, Bags]:
    vs = sorted(g.vertices)
    if len(vs) == 1:
        return 1, [frozenset(vs)]
    for u in vs:
        for v in vs:
            if u < v and not g.has_edge(u, v) and p3_suitability(g, u, v):
                return 3, [frozenset((u,)), frozenset(vs) - {u, v}, frozenset((v,))]
    # a vertex last in BFS order never disconnects the rest
    order = list(bfs_distances(g, vs[0]))
    last = order[-1]
    return 2, [frozenset((last,)), frozenset(vs) - {last}]


def longest_path_contractibility(g: Graph, class_tag: str, check_class: bool = True) -> Tuple[int, Bags]:
    """Largest k with g contracting to P_k, together with the bags (path order)."""
    fam = family_for(class_tag)
    if g.n == 0:
        raise GraphError("empty graph")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    if check_class:
        require_member(g, fam)
    ctx = Context(fam)
    vs = sorted(g.vertices)
    dist = {x: bfs_distances(g, x) for x in vs}
    for k in range(min(fam.kmax, g.n), 3, -1):
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if g.has_edge(u, v) or dist[u][v] < k - 1:
                    continue
                bags = ctx.solve(g, u, v, k)
                if bags is not None:
                    return k, bags
    return _small_paths(g)


def lpc_sp1p4(g: Graph, s: int) -> Tuple[int, Bags]:
    return longest_path_contractibility(g, f"sp1p4:{s}")
