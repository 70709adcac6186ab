"""P_k-suitability on (sP1+P4)-free graphs for a fixed s.

Every yes-instance has a solution whose bag next to u (or v) holds a
connecting core of at most (s+2)(2s+4) vertices. P4 is a constant-core
check; longer paths guess u's core, fold in its closure and peel.
"""

from __future__ import annotations

from typing import Optional

from ..graph import Graph
from ..patterns import sp1_p4
from .common import Bags, Context, alpha_constant_check, connected_cores, contraction_rule, t_set


def core_bound(s: int) -> int:
    return (s + 2) * (2 * s + 4)


class Family:
    def __init__(self, s: int) -> None:
        if s < 0:
            raise ValueError("s must be non-negative")
        self.s = s
        self.name = f"sp1p4:{s}"
        self.pattern = sp1_p4(s)
        self.alpha = core_bound(s)
        self.kmax = 2 * s + 4

    def p4(self, ctx: Context, g: Graph, u: int, v: int, node: int) -> Optional[Bags]:
        g2 = contraction_rule(g, g.neighbors(u), sorted(g.neighbors(u)))
        sol = alpha_constant_check(g2, u, v, self.alpha)
        if sol is None:
            return None
        return [g2.lift(b) for b in sol.bags(g2, u, v)]

    def pk(self, ctx: Context, g: Graph, u: int, v: int, k: int, node: int) -> Optional[Bags]:
        g2 = contraction_rule(g, g.neighbors(u), sorted(g.neighbors(u)))
        cores = connected_cores(g2, g2.neighbors(u), t_set(g2, u, v), self.alpha)
        return ctx.try_peels(g2, u, v, k, cores, node, "core")
