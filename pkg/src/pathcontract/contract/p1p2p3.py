"""P_k-suitability on (P1+P2+P3)-free graphs.

P4: after an 8-constant check every remaining solution has independent
sides. Guessing two covering vertices with one private neighbour each on
both sides pins down the shared neighbours w_u and w_v; forced placements
then leave a matching problem between the private neighbours and T.
Longer paths peel one end, branching over a single connector vertex.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Optional, Tuple

from ..graph import Graph, bfs_distances, distance
from ..matching import BipartiteGraph, maximum_matching
from ..patterns import P1_P2_P3
from .common import (
    Bags,
    Context,
    Solution,
    alpha_constant_check,
    contraction_rule,
    is_solution,
    normalize_ends,
    t_set,
)
from .trace import branch

NAME = "p1p2p3"
PATTERN = P1_P2_P3
ALPHA = 8
kmax = 7


def private_pairs(g: Graph, x: int, t) -> List[Tuple[int, int, int, int, frozenset]]:
    """Non-adjacent s < s' in T, each with exactly one neighbour in N(x) the other lacks.

    Returns (s, s', w_s, w_s', common) where ``common`` is their shared part of N(x),
    required to be nonempty.
    """
    nx = g.neighbors(x)
    out = []
    for s, s2 in combinations(sorted(t), 2):
        if g.has_edge(s, s2):
            continue
        a = g.neighbors(s) & nx
        b = g.neighbors(s2) & nx
        only_a, only_b, common = a - b, b - a, a & b
        if len(only_a) != 1 or len(only_b) != 1 or not common:
            continue
        out.append((s, s2, min(only_a), min(only_b), common))
    return out


def _contract_into(g: Graph, x: int, w: int, z: int) -> Graph:
    return contraction_rule(g, g.neighbors(x) | {z}, [w])


def _forced_placement(g: Graph, u: int, v: int, wu: int, wv: int) -> Optional[Graph]:
    """Apply the per-vertex placement rules until none fires; None means discard."""
    changed = True
    while changed:
        changed = False
        for z in sorted(t_set(g, u, v)):
            nz = g.neighbors(z)
            au, av = wu in nz, wv in nz
            qu = nz & (g.neighbors(u) - {wu})
            qv = nz & (g.neighbors(v) - {wv})
            if not au or not av:
                if not au and not av:
                    return None
                # z must go to the side whose w it sees
                own_q = qv if av else qu
                if len(own_q) >= 2:
                    return None
                g = _contract_into(g, v, wv, z) if av else _contract_into(g, u, wu, z)
                changed = True
                break
            if len(qu) + len(qv) <= 1:
                g = _contract_into(g, u, wu, z) if qu else _contract_into(g, v, wv, z)
                changed = True
                break
            if len(qu) >= 2:
                if len(qv) >= 2:
                    return None
                g = _contract_into(g, v, wv, z)
                changed = True
                break
            if len(qv) >= 2:
                g = _contract_into(g, u, wu, z)
                changed = True
                break
    return g


def _match(g: Graph, u: int, v: int, wu: int, wv: int) -> Optional[Solution]:
    t = t_set(g, u, v)
    qu = g.neighbors(u) - {wu}
    qv = g.neighbors(v) - {wv}
    left = [("u", q) for q in sorted(qu)] + [("v", q) for q in sorted(qv)]
    edges = [((side, q), z) for side, q in left for z in g.neighbors(q) & t]
    m = maximum_matching(BipartiteGraph.build(left, t, edges))
    if len(m) != len(qu) + len(qv):
        return None
    s_u = frozenset(z for (side, _), z in m.items() if side == "u")
    sol = Solution(s_u, t - s_u)
    return sol if is_solution(g, u, v, sol.s_u, sol.s_v) else None


def p4(ctx: Context, g: Graph, u: int, v: int, node: int) -> Optional[Bags]:
    g = normalize_ends(g, u, v)
    sol = alpha_constant_check(g, u, v, ALPHA)
    if sol is not None:
        return [g.lift(b) for b in sol.bags(g, u, v)]
    t = t_set(g, u, v)
    u_pairs = private_pairs(g, u, t)
    v_pairs = private_pairs(g, v, t)
    # private_pairs already enforces the induced 2P2 on each side and that no
    # other private neighbour touches the guessed pair
    for s, s2, _, _, common_u in u_pairs:
        for t1, t2, _, _, common_v in v_pairs:
            if {t1, t2} & {s, s2}:
                continue
            wu, wv = min(common_u), min(common_v)
            h = contraction_rule(g, g.neighbors(u) | {s, s2}, [wu])
            h = contraction_rule(h, h.neighbors(v) | {t1, t2}, [wv])
            step = branch(node, f"pairs:{s}-{s2}/{t1}-{t2}", h, u, v, 4)
            h = _forced_placement(h, u, v, wu, wv)
            if h is None:
                continue
            sol = _match(h, u, v, wu, wv)
            if sol is not None:
                return [h.lift(b) for b in sol.bags(h, u, v)]
    return None


def _peel_or_cores(ctx: Context, g: Graph, u: int, v: int, k: int, node: int, cores) -> Optional[Bags]:
    if len(g.neighbors(u)) == 1:
        return ctx.try_peels(g, u, v, k, [frozenset()], node, "single_u")
    if len(g.neighbors(v)) == 1:
        return ctx.try_peel_other_side(g, u, v, k, [frozenset()], node, "single_v")
    if cores is None:
        return None
    return ctx.try_peels(g, u, v, k, cores(), node, "connector")


def pk(ctx: Context, g: Graph, u: int, v: int, k: int, node: int) -> Optional[Bags]:
    g = normalize_ends(g, u, v)
    nu = g.neighbors(u)
    if k == 5:
        if len(nu) >= 2 and len(g.neighbors(v)) >= 2 and distance(g, u, v) > 4:
            return ctx.try_reductions(g, u, v, k, node)
        du, dv = bfs_distances(g, u), bfs_distances(g, v)

        def cores():
            for s in sorted(x for x, d in du.items() if d == 2):
                if dv.get(s) == 2:
                    continue
                if nu <= g.neighbors(s):
                    yield frozenset((s,))

        return _peel_or_cores(ctx, g, u, v, k, node, cores)
    if k == 6:
        t = t_set(g, u, v)

        def cores():
            for s in sorted(t):
                if nu <= g.neighbors(s):
                    yield frozenset((s,))

        return _peel_or_cores(ctx, g, u, v, k, node, cores)
    # k == 7: two neighbours of u would complete an induced P1+P2+P3
    return _peel_or_cores(ctx, g, u, v, k, node, None)
