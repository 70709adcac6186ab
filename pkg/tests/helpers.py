from pathcontract.graph import Graph


def graph(edges, n=None):
    edges = list(edges)
    vs = set(range(n)) if n is not None else {x for e in edges for x in e}
    return Graph.from_edges(sorted(vs), edges)


def path_graph(n):
    return graph([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n):
    return graph([(i, (i + 1) % n) for i in range(n)], n)


# u=0 a=1 b=2 c=3 d=4 v=5
H_SHAPE = graph([(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
