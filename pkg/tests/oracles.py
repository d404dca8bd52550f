"""Brute-force reference implementations, kept independent of the solvers.

These deliberately use the plainest possible formulations (full subset or
edge-subset recursion) so that agreement with the production algorithms is
meaningful evidence, not a shared bug.
"""

from itertools import combinations

from annihilator import Graph


def alpha_brute(g: Graph) -> int:
    """Maximum independent set size by checking every vertex subset."""
    best = 0
    vertices = range(g.n)
    for size in range(g.n, 0, -1):
        for subset in combinations(vertices, size):
            if all(not g.adjacent(u, v) for u, v in combinations(subset, 2)):
                return size
    return best


def matching_brute(g: Graph) -> int:
    """Maximum matching size by recursion over the edge list."""
    edges = list(g.edges())

    def rec(start: int, used: int) -> int:
        best = 0
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            best = max(best, 1 + rec(i + 1, used | 1 << u | 1 << v))
        return best

    return rec(0, 0)


def critical_brute(g: Graph) -> tuple[int, int]:
    """(critical difference, critical independence number) over all subsets."""
    best_diff = 0
    best_size = 0
    for mask in range(1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        if any(g.adjacent(u, v) for u, v in combinations(members, 2)):
            continue
        closed = set()
        for v in members:
            closed.update(g.neighbors(v))
        diff = len(members) - len(closed - set(members))
        if diff > best_diff or (diff == best_diff and len(members) > best_size):
            best_diff, best_size = diff, len(members)
    return best_diff, best_size
