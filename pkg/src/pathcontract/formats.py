"""Text formats: graphs, hypergraphs, role sidecars and witness JSON.

Graph files::

    # comment lines start with '#'
    n m
    u v        (m lines, 0-based vertex indices)

Hypergraph files::

    m n
    k e_1 ... e_k   (n lines, 0-based element indices)
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .graph import Graph, GraphError


class FormatError(ValueError):
    """Raised for malformed input text."""


PathLike = Union[str, Path]


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(tokens: Sequence[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header line 'n m'")
    lineno, head = lines[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    n, m = _ints(head, lineno)
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative count")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    edges = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: edge must be 'u v'")
        a, b = _ints(toks, lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"line {lineno}: vertex out of range 0..{n - 1}")
        if a == b:
            raise FormatError(f"line {lineno}: self-loop")
        e = (min(a, b), max(a, b))
        if e in edges:
            raise FormatError(f"line {lineno}: duplicate edge {a} {b}")
        edges.add(e)
    return Graph.from_edges(range(n), edges)


def format_graph(g: Graph) -> str:
    """Serialize with vertices renumbered 0..n-1 in id order and edges sorted."""
    index = {v: i for i, v in enumerate(g.vertices)}
    edges = sorted((min(index[a], index[b]), max(index[a], index[b])) for a, b in g.edges())
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{a} {b}" for a, b in edges)
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_graph(g))


# hypergraphs


class Hypergraph:
    """Element count plus an ordered list of hyperedges over elements 0..m-1."""

    __slots__ = ("m", "hyperedges")

    def __init__(self, m: int, hyperedges: Iterable[Iterable[int]]) -> None:
        if m < 1:
            raise GraphError("a hypergraph needs at least one element")
        self.m = m
        edges = []
        for i, e in enumerate(hyperedges):
            e = frozenset(int(x) for x in e)
            if not e:
                raise GraphError(f"hyperedge {i} is empty")
            if any(not 0 <= x < m for x in e):
                raise GraphError(f"hyperedge {i} has an element outside 0..{m - 1}")
            edges.append(e)
        self.hyperedges: Tuple[frozenset, ...] = tuple(edges)

    @property
    def n(self) -> int:
        return len(self.hyperedges)

    def normalized(self) -> "Hypergraph":
        """Append the full element set as last hyperedge unless it is already last.

        This keeps 2-colourability: both colour classes are nonempty, so the
        full set always meets both.
        """
        full = frozenset(range(self.m))
        if self.hyperedges and self.hyperedges[-1] == full:
            return self
        return Hypergraph(self.m, list(self.hyperedges) + [full])

    def is_normalized(self) -> bool:
        return bool(self.hyperedges) and self.hyperedges[-1] == frozenset(range(self.m))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Hypergraph) and (self.m, self.hyperedges) == (other.m, other.hyperedges)

    def __hash__(self) -> int:
        return hash((self.m, self.hyperedges))

    def __repr__(self) -> str:
        return f"Hypergraph(m={self.m}, hyperedges={[sorted(e) for e in self.hyperedges]})"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("missing header line 'm n'")
    lineno, head = lines[0]
    if len(head) != 2:
        raise FormatError(f"line {lineno}: header must be 'm n'")
    m, n = _ints(head, lineno)
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"header announces {n} hyperedges, found {len(body)}")
    edges = []
    for lineno, toks in body:
        vals = _ints(toks, lineno)
        if not vals or vals[0] != len(vals) - 1:
            raise FormatError(f"line {lineno}: expected 'k e_1 ... e_k'")
        edges.append(vals[1:])
    try:
        return Hypergraph(m, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.m} {h.n}"]
    for e in h.hyperedges:
        lines.append(" ".join(str(x) for x in [len(e)] + sorted(e)))
    return "\n".join(lines) + "\n"


def read_hypergraph(path: PathLike) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


# roles


def format_roles(roles: Mapping[int, str], g: Graph) -> str:
    """Sidecar 'vertexId role' lines, with ids renumbered like format_graph."""
    index = {v: i for i, v in enumerate(g.vertices)}
    return "".join(f"{index[v]} {roles[v]}\n" for v in g.vertices)


def parse_roles(text: str) -> Dict[int, str]:
    out: Dict[int, str] = {}
    for lineno, toks in _content_lines(text):
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 'vertexId role'")
        out[_ints(toks[:1], lineno)[0]] = toks[1]
    return out


# witness JSON


def witness_to_json(pattern: str, bags: Sequence[Iterable[int]]) -> str:
    return json.dumps({"pattern": pattern, "bags": [sorted(b) for b in bags]})


def witness_from_json(text: str) -> Tuple[str, List[List[int]]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid witness JSON: {exc}") from None
    if not isinstance(data, dict) or "pattern" not in data or "bags" not in data:
        raise FormatError("witness JSON needs 'pattern' and 'bags'")
    pattern = data["pattern"]
    bags = data["bags"]
    if not isinstance(pattern, str) or not isinstance(bags, list):
        raise FormatError("witness JSON has wrong field types")
    out = []
    for bag in bags:
        if not isinstance(bag, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in bag):
            raise FormatError("each bag must be a list of integers")
        out.append(bag)
    return pattern, out
