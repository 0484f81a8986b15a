"""Canonical labelling by individualisation-refinement.

The search tree is built from equitable ordered partitions: the root is the
degree partition refined to equitability, and each child individualises one
vertex of the first smallest non-singleton cell.  Every leaf is a discrete
partition, i.e. a relabelling; the canonical form is the leaf whose relabelled
adjacency rows are lexicographically least.  Automorphisms found at leaves
are used to skip children lying in an orbit that was already explored, which
keeps highly symmetric graphs (empty, complete, unions of cliques) cheap.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits, relabel
from .graph6 import to_graph6

CanonicalKey = bytes


def _refine(adj: Sequence[int], cells: list[list[int]], queue: list[int]) -> list[list[int]]:
    """Refine ``cells`` in place to an equitable partition.

    ``queue`` holds splitter bitsets.  Cells are split by the number of
    neighbours each member has in the splitter; fragments are ordered by that
    count, which keeps the result independent of vertex labels.
    """
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            counts = [(adj[x] & w).bit_count() for x in cell]
            c0 = counts[0]
            if all(c == c0 for c in counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for x, c in zip(cell, counts):
                groups.setdefault(c, []).append(x)
            frags = [groups[c] for c in sorted(groups)]
            cells[i : i + 1] = frags
            for f in frags:
                m = 0
                for x in f:
                    m |= 1 << x
                queue.append(m)
            i += len(frags)
    return cells


def _orbit_reps(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` with ``relabel(g, perm)`` the canonical form."""
    n = g.n
    adj = g.adj
    if n <= 1:
        return list(range(n))

    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(adj[v].bit_count(), []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    queue = []
    for c in cells:
        m = 0
        for x in c:
            m |= 1 << x
        queue.append(m)
    root = _refine(adj, cells, queue)

    state = {"first": None, "best": None}
    gens: list[list[int]] = []

    def leaf(cells):
        perm = [0] * n
        for i, c in enumerate(cells):
            perm[c[0]] = i
        rows = [0] * n
        for v in range(n):
            r = 0
            for w in bits(adj[v]):
                r |= 1 << perm[w]
            rows[perm[v]] = r
        cert = tuple(rows)
        first = state["first"]
        if first is None:
            state["first"] = (cert, perm)
            state["best"] = (cert, perm)
            return
        for ref_cert, ref_perm in (first, state["best"]):
            if cert == ref_cert:
                inv = [0] * n
                for v, p in enumerate(ref_perm):
                    inv[p] = v
                gamma = [inv[perm[x]] for x in range(n)]
                if any(gamma[x] != x for x in range(n)):
                    gens.append(gamma)
                return
        if cert < state["best"][0]:
            state["best"] = (cert, perm)

    def search(cells, prefix):
        t = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                t, size = i, len(c)
        if t < 0:
            leaf(cells)
            return
        target = cells[t]
        tried: list[int] = []
        ngens_seen = -1
        reps = None
        for v in target:
            if tried:
                if ngens_seen != len(gens):
                    ngens_seen = len(gens)
                    stab = [h for h in gens if all(h[p] == p for p in prefix)]
                    reps = _orbit_reps(n, stab) if stab else None
                if reps is not None and any(reps[v] == reps[u] for u in tried):
                    continue
            child = [list(c) for c in cells]
            rest = [x for x in target if x != v]
            child[t : t + 1] = [[v], rest]
            _refine(adj, child, [1 << v])
            search(child, prefix + [v])
            tried.append(v)

    search(root, [])
    return state["best"][1]


def canonical_form(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g))


def canonical_key(g: Graph) -> CanonicalKey:
    """Relabelling-invariant key: graph6 bytes of the canonical form."""
    return to_graph6(canonical_form(g)).encode("ascii")
