"""Small graph builders shared across the test modules."""

from annihilator import Graph, parse_edge_list


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges())
    edges.extend((u + g.n, v + g.n) for u, v in h.edges())
    return Graph(g.n + h.n, edges)


def triangle_plus_singleton() -> Graph:
    return parse_edge_list("n 4\n0 1\n1 2\n2 0")
