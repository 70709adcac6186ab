"""Immutable undirected simple graphs with contraction provenance.

Every graph carries an origin map: each current vertex id points at the set
of vertex ids of the graph it was derived from. Fresh graphs use the
identity map, so after any chain of contractions a bag of current vertices
can be expanded back to input vertices by taking the union of origins.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

Vertex = int


class GraphError(Exception):
    """Base class for errors raised by graph operations."""


class NotAnEdge(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class PatternTooLarge(GraphError):
    pass


class NotP4Free(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotInClass(GraphError):
    """Input graph contains a forbidden induced pattern."""


class NotLinearForest(GraphError):
    pass


class Graph:
    """Undirected simple graph. Instances are never mutated after construction."""

    __slots__ = ("_adj", "_origin", "_vertices", "_key")

    def __init__(
        self,
        adjacency: Mapping[Vertex, Iterable[Vertex]],
        origin: Optional[Mapping[Vertex, Iterable[Vertex]]] = None,
        *,
        _trusted: bool = False,
    ) -> None:
        if _trusted:
            self._adj = adjacency  # type: ignore[assignment]
            self._origin = origin  # type: ignore[assignment]
        else:
            adj: Dict[Vertex, FrozenSet[Vertex]] = {}
            for v, nbrs in adjacency.items():
                adj[int(v)] = frozenset(int(x) for x in nbrs)
            for v, nbrs in adj.items():
                if v in nbrs:
                    raise GraphError(f"self-loop at {v}")
                for x in nbrs:
                    if x not in adj or v not in adj[x]:
                        raise GraphError(f"adjacency not symmetric on {v}-{x}")
            self._adj = adj
            if origin is None:
                self._origin = {v: frozenset((v,)) for v in adj}
            else:
                org = {int(v): frozenset(int(x) for x in s) for v, s in origin.items()}
                if set(org) != set(adj):
                    raise GraphError("origin map must cover exactly the vertex set")
                seen: set = set()
                for s in org.values():
                    if not s or seen & s:
                        raise GraphError("origin sets must be nonempty and disjoint")
                    seen |= s
                self._origin = org
        self._vertices: Optional[Tuple[Vertex, ...]] = None
        self._key = None

    # construction helpers

    @classmethod
    def from_edges(cls, vertices: Iterable[Vertex], edges: Iterable[Tuple[Vertex, Vertex]]) -> "Graph":
        adj: Dict[Vertex, set] = {int(v): set() for v in vertices}
        for a, b in edges:
            a, b = int(a), int(b)
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if a not in adj or b not in adj:
                raise UnknownVertex(f"edge {a}-{b} uses a vertex outside the vertex set")
            adj[a].add(b)
            adj[b].add(a)
        return cls(adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls({v: () for v in range(n)})

    # basic queries

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        if self._vertices is None:
            self._vertices = tuple(sorted(self._adj))
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.vertices)

    def neighbors(self, v: Vertex) -> FrozenSet[Vertex]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: Vertex, b: Vertex) -> bool:
        return b in self._adj.get(a, ())

    def edges(self) -> List[Tuple[Vertex, Vertex]]:
        """All edges as (small, large) pairs in lexicographic order."""
        out = [(a, b) for a in self.vertices for b in self._adj[a] if a < b]
        out.sort()
        return out

    def origin(self, v: Vertex) -> FrozenSet[Vertex]:
        try:
            return self._origin[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def origins(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return dict(self._origin)

    def lift(self, vs: Iterable[Vertex]) -> FrozenSet[Vertex]:
        """Union of the origin sets of ``vs``."""
        out: set = set()
        for v in vs:
            out |= self.origin(v)
        return frozenset(out)

    def adjacency(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return dict(self._adj)

    def neighborhood(self, vs: Iterable[Vertex]) -> FrozenSet[Vertex]:
        """Open neighbourhood of a vertex set."""
        vs = set(vs)
        out: set = set()
        for v in vs:
            out |= self.neighbors(v)
        return frozenset(out - vs)

    def closed_neighborhood(self, v: Vertex) -> FrozenSet[Vertex]:
        return self.neighbors(v) | {v}

    def key(self):
        """Hashable identity of the labelled graph, ignoring provenance."""
        if self._key is None:
            self._key = tuple((v, tuple(sorted(self._adj[v]))) for v in self.vertices)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self._origin == other._origin

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    # derived graphs

    def fresh(self) -> "Graph":
        """Same graph with the identity origin map."""
        return Graph(self._adj, {v: frozenset((v,)) for v in self._adj}, _trusted=True)

    def induced(self, vs: Iterable[Vertex]) -> "Graph":
        keep = set(vs)
        for v in keep:
            if v not in self._adj:
                raise UnknownVertex(v)
        adj = {v: self._adj[v] & keep for v in keep}
        return Graph(adj, {v: self._origin[v] for v in keep}, _trusted=True)

    def remove(self, vs: Iterable[Vertex]) -> "Graph":
        drop = set(vs)
        return self.induced(v for v in self._adj if v not in drop)

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> "Graph":
        """Rename vertices; origins travel with their vertex."""
        adj = {mapping[v]: frozenset(mapping[x] for x in nb) for v, nb in self._adj.items()}
        org = {mapping[v]: s for v, s in self._origin.items()}
        if len(adj) != len(self._adj):
            raise GraphError("relabelling must be injective")
        return Graph(adj, org, _trusted=True)

    def compact(self) -> Tuple["Graph", Dict[Vertex, Vertex]]:
        """Relabel to 0..n-1 preserving order; returns the graph and old->new map."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        return self.relabel(mapping), mapping

    def add_edges(self, edges: Iterable[Tuple[Vertex, Vertex]]) -> "Graph":
        adj = {v: set(nb) for v, nb in self._adj.items()}
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at {a}")
            if a not in adj or b not in adj:
                raise UnknownVertex((a, b))
            adj[a].add(b)
            adj[b].add(a)
        return Graph({v: frozenset(s) for v, s in adj.items()}, self._origin, _trusted=True)

    def merge(self, groups: Iterable[Tuple[Vertex, Iterable[Vertex]]]) -> "Graph":
        """Replace each group by its keeper vertex.

        ``groups`` yields (keeper, members) with the keeper among the members.
        Groups must be disjoint; connectivity of a group is the caller's
        concern (contraction helpers below check it).
        """
        rep: Dict[Vertex, Vertex] = {}
        for keeper, members in groups:
            members = set(members)
            if keeper not in members:
                raise GraphError("keeper must belong to its group")
            for x in members:
                if x not in self._adj:
                    raise UnknownVertex(x)
                if x in rep:
                    raise GraphError("groups overlap")
                rep[x] = keeper
        if not rep:
            return self
        adj: Dict[Vertex, set] = {}
        org: Dict[Vertex, FrozenSet[Vertex]] = {}
        for v, nb in self._adj.items():
            r = rep.get(v, v)
            mapped = {rep.get(x, x) for x in nb}
            if r in adj:
                adj[r] |= mapped
                org[r] = org[r] | self._origin[v]
            else:
                adj[r] = mapped
                org[r] = self._origin[v]
        for r, s in adj.items():
            s.discard(r)
        return Graph({v: frozenset(s) for v, s in adj.items()}, org, _trusted=True)


# contraction


def contract_edge(g: Graph, u: Vertex, v: Vertex) -> Graph:
    """Contract the edge uv on u: the merged vertex keeps id ``u``."""
    if u not in g or v not in g or not g.has_edge(u, v):
        raise NotAnEdge(f"{u}-{v} is not an edge")
    return g.merge([(u, (u, v))])


def components_of(g: Graph, vs: Iterable[Vertex]) -> List[List[Vertex]]:
    """Connected components of g[vs], each sorted, ordered by smallest member."""
    remaining = set(vs)
    out: List[List[Vertex]] = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in remaining:
                    remaining.discard(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        out.append(comp)
    return out


def contract_set(g: Graph, s: Iterable[Vertex], prefer: Sequence[Vertex] = ()) -> Graph:
    """Contract every edge of g[s].

    Each component of g[s] becomes one vertex. The surviving id is the first
    entry of ``prefer`` lying in the component, or the component's smallest id
    when no preferred vertex is present.
    """
    s = set(s)
    for x in s:
        if x not in g:
            raise UnknownVertex(x)
    rank = {}
    for i, x in enumerate(prefer):
        rank.setdefault(x, i)
    groups = []
    for comp in components_of(g, s):
        if len(comp) == 1:
            continue
        preferred = [x for x in comp if x in rank]
        keeper = min(preferred, key=rank.__getitem__) if preferred else comp[0]
        groups.append((keeper, comp))
    return g.merge(groups)


def connected_components(g: Graph) -> List[List[Vertex]]:
    return components_of(g, g.vertices)


def is_connected(g: Graph, vs: Optional[Iterable[Vertex]] = None) -> bool:
    vs = g.vertices if vs is None else list(vs)
    if not vs:
        return True
    return len(components_of(g, vs)) == 1


# distances


def bfs_distances(g: Graph, source: Vertex, within: Optional[Iterable[Vertex]] = None) -> Dict[Vertex, int]:
    allowed = None if within is None else set(within)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


INFINITE = float("inf")


def distance(g: Graph, u: Vertex, v: Vertex):
    """BFS distance; ``INFINITE`` when u and v are disconnected."""
    g.neighbors(u)
    g.neighbors(v)
    return bfs_distances(g, u).get(v, INFINITE)


def shortest_path(g: Graph, u: Vertex, v: Vertex) -> Optional[List[Vertex]]:
    """Lexicographically smallest shortest path from u to v, or None."""
    to_v = bfs_distances(g, v)
    if u not in to_v:
        return None
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(min(y for y in g.neighbors(x) if to_v.get(y) == to_v[x] - 1))
    return path


def eccentric_pairs(g: Graph) -> Tuple[int, List[Tuple[Vertex, Vertex]]]:
    """Diameter of a connected graph and all pairs realising it."""
    best, pairs = 0, []
    for a in g.vertices:
        d = bfs_distances(g, a)
        if len(d) != g.n:
            raise NotConnected("graph is not connected")
        for b, db in d.items():
            if a < b:
                if db > best:
                    best, pairs = db, [(a, b)]
                elif db == best:
                    pairs.append((a, b))
    pairs.sort()
    return best, pairs


# induced subgraphs


MAX_PATTERN = 10


def _embeddings(g: Graph, h: Graph, limit: int) -> Iterator[Dict[Vertex, Vertex]]:
    if h.n > limit:
        raise PatternTooLarge(f"pattern has {h.n} vertices, bound is {limit}")
    hv = h.vertices
    if h.n > g.n:
        return
    gv = g.vertices
    index = {v: i for i, v in enumerate(gv)}
    adj = [0] * len(gv)
    for v in gv:
        mask = 0
        for x in g.neighbors(v):
            mask |= 1 << index[x]
        adj[index[v]] = mask
    full = (1 << len(gv)) - 1
    hdeg = [h.degree(x) for x in hv]
    gdeg = [bin(a).count("1") for a in adj]
    hadj = [[h.has_edge(hv[i], hv[j]) for j in range(len(hv))] for i in range(len(hv))]
    chosen: List[int] = []

    def rec(i: int, used: int) -> Iterator[Dict[Vertex, Vertex]]:
        if i == len(hv):
            yield {hv[j]: gv[chosen[j]] for j in range(len(hv))}
            return
        cand = full & ~used
        for j, c in enumerate(chosen):
            if hadj[i][j]:
                cand &= adj[c]
            else:
                cand &= ~adj[c]
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            if gdeg[c] < hdeg[i]:
                continue
            chosen.append(c)
            yield from rec(i + 1, used | low)
            chosen.pop()

    yield from rec(0, 0)


def contains_induced(g: Graph, h: Graph, limit: int = MAX_PATTERN) -> Optional[Dict[Vertex, Vertex]]:
    """First induced embedding of h in g, or None.

    Embeddings are compared as the tuple of images of h's vertices in id
    order; the lexicographically smallest one is returned.
    """
    return next(_embeddings(g, h, limit), None)


def all_induced(g: Graph, h: Graph, limit: int = MAX_PATTERN) -> Iterator[Dict[Vertex, Vertex]]:
    return _embeddings(g, h, limit)


def is_h_free(g: Graph, hs: Sequence[Graph], limit: int = MAX_PATTERN) -> bool:
    return all(contains_induced(g, h, limit) is None for h in hs)


# structure


def complement(g: Graph) -> Graph:
    vs = g.vertices
    adj = {v: frozenset(x for x in vs if x != v and not g.has_edge(v, x)) for v in vs}
    return Graph(adj, g.origins(), _trusted=True)


def spanning_complete_bipartite(g: Graph) -> Tuple[FrozenSet[Vertex], FrozenSet[Vertex]]:
    """Split a connected P4-free graph into two classes complete to each other.

    A is the complement component containing the smallest vertex id.
    """
    from .patterns import path

    if g.n < 2 or not is_connected(g):
        raise NotConnected("need a connected graph on at least two vertices")
    if contains_induced(g, path(4)) is not None:
        raise NotP4Free("graph contains an induced P4")
    comps = components_of(complement(g), g.vertices)
    a = frozenset(comps[0])
    b = frozenset(g.vertices) - a
    return a, b


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests."""
    best: Optional[int] = None
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    if best is None or cyc < best:
                        best = cyc
    return best


def subdivide_all_edges(g: Graph, t: int) -> Graph:
    """Replace every edge by a path with ``t`` new internal vertices.

    New vertices get ids after max(V), allocated edge by edge in sorted edge
    order, walking from the smaller endpoint.
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    nxt = (max(g.vertices) + 1) if g.n else 0
    verts = list(g.vertices)
    edges: List[Tuple[Vertex, Vertex]] = []
    for a, b in g.edges():
        chain = [a]
        for _ in range(t):
            verts.append(nxt)
            chain.append(nxt)
            nxt += 1
        chain.append(b)
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(verts, edges)


def line_graph(g: Graph) -> Tuple[Graph, List[Tuple[Vertex, Vertex]]]:
    """Line graph with vertex i standing for the i-th edge of ``g.edges()``."""
    es = g.edges()
    incident: Dict[Vertex, List[int]] = {v: [] for v in g.vertices}
    for i, (a, b) in enumerate(es):
        incident[a].append(i)
        incident[b].append(i)
    pairs = set()
    for ids in incident.values():
        for i, j in combinations(ids, 2):
            pairs.add((i, j))
    return Graph.from_edges(range(len(es)), pairs), es


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def is_linear_forest(h: Graph) -> bool:
    return is_forest(h) and all(h.degree(v) <= 2 for v in h.vertices)


def is_bipartite(g: Graph) -> bool:
    colour: Dict[Vertex, int] = {}
    for s in g.vertices:
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def linear_forest_parts(h: Graph) -> List[int]:
    """Component sizes of a linear forest, largest first."""
    return sorted((len(c) for c in connected_components(h)), reverse=True)
