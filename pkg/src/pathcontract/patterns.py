"""Builders for the small pattern graphs used throughout the package."""

from __future__ import annotations

import re
from typing import List

from .graph import Graph, GraphError


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("a path needs at least one vertex")
    return Graph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def claw() -> Graph:
    return star(3)


def disjoint_union(*gs: Graph) -> Graph:
    verts: List[int] = []
    edges = []
    offset = 0
    for g in gs:
        ordered = g.vertices
        index = {v: offset + i for i, v in enumerate(ordered)}
        verts.extend(index.values())
        edges.extend((index[a], index[b]) for a, b in g.edges())
        offset += len(ordered)
    return Graph.from_edges(verts, edges)


def linear_forest(*sizes: int) -> Graph:
    """Disjoint union of paths with the given vertex counts, in order."""
    return disjoint_union(*(path(s) for s in sizes))


def sp1_p4(s: int) -> Graph:
    return linear_forest(*([1] * s), 4)


P2_P4 = linear_forest(2, 4)
P1_P2_P3 = linear_forest(1, 2, 3)
P1_P5 = linear_forest(1, 5)


_TERM = re.compile(r"^(\d*)([A-Za-z]+)(\d*)$")


def parse_pattern(text: str) -> Graph:
    """Parse names such as ``P4``, ``2P1+P4``, ``3P2``, ``C5``, ``K13``, ``K4``.

    ``sP1+P4`` style terms need a literal multiplier; ``K1,3`` and ``K_{1,3}``
    are accepted for the claw.
    """
    cleaned = text.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")
    if not cleaned:
        raise GraphError("empty pattern name")
    parts = []
    for term in cleaned.split("+"):
        if re.fullmatch(r"\d*K1,?3", term, flags=re.IGNORECASE):
            mult = re.match(r"\d*", term).group(0)
            parts.extend([star(3)] * (int(mult) if mult else 1))
            continue
        m = _TERM.match(term)
        if not m:
            raise GraphError(f"cannot parse pattern term {term!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        kind = m.group(2).upper()
        size = m.group(3)
        if not size:
            raise GraphError(f"pattern term {term!r} lacks a size")
        size = int(size)
        if kind == "P":
            g = path(size)
        elif kind == "C":
            g = cycle(size)
        elif kind == "K":
            g = complete(size)
        else:
            raise GraphError(f"unknown pattern kind {kind!r}")
        if mult < 1:
            raise GraphError(f"multiplier must be positive in {term!r}")
        parts.extend([g] * mult)
    return disjoint_union(*parts)
