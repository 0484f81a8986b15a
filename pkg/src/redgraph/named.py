"""Constructors for standard small graphs."""

from __future__ import annotations

import itertools

from .graph import Graph


def empty(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << u) for u in range(n)], check=False)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(k: int) -> Graph:
    n = 1 << k
    return Graph.from_edges(n, [(u, u ^ (1 << i)) for u in range(n) for i in range(k) if u < u ^ (1 << i)])


def triangular_prism() -> Graph:
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching (order 2n)."""
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def icosahedron() -> Graph:
    # two poles (0, 11) and two offset pentagons (1..5, 6..10)
    edges = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        edges += [(0, a), (a, b), (11, c), (c, d), (a, c), (b, c)]
    return Graph.from_edges(12, edges)


def kneser(n: int, k: int) -> Graph:
    subsets = [frozenset(s) for s in itertools.combinations(range(n), k)]
    edges = [(i, j) for i, j in itertools.combinations(range(len(subsets)), 2) if not subsets[i] & subsets[j]]
    return Graph.from_edges(len(subsets), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def wheel(rim: int) -> Graph:
    """Hub 0 joined to a ``rim``-cycle on 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)
