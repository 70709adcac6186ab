"""P_k-suitability on (P1+P5)-free graphs.

With N(u) independent, some solution has a core of at most two vertices
next to N(u). P4 is then a 2-constant check, and P5, P6 branch over the
core and peel u's side off.
"""

from __future__ import annotations

from typing import Optional

from ..graph import Graph
from ..patterns import P1_P5
from .common import Bags, Context, alpha_constant_check, connected_cores, contraction_rule, normalize_ends, t_set

NAME = "p1p5"
PATTERN = P1_P5
ALPHA = 2
kmax = 6


def p4(ctx: Context, g: Graph, u: int, v: int, node: int) -> Optional[Bags]:
    g2 = normalize_ends(g, u, v)
    sol = alpha_constant_check(g2, u, v, ALPHA)
    if sol is None:
        return None
    return [g2.lift(b) for b in sol.bags(g2, u, v)]


def pk(ctx: Context, g: Graph, u: int, v: int, k: int, node: int) -> Optional[Bags]:
    g2 = contraction_rule(g, g.neighbors(u), sorted(g.neighbors(u)))
    cores = connected_cores(g2, g2.neighbors(u), t_set(g2, u, v), ALPHA)
    return ctx.try_peels(g2, u, v, k, cores, node, "core")
