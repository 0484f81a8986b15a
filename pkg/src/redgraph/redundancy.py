"""Surround, twin, link and distance-redundancy predicates.

Conventions:

* ``v`` surrounds ``u`` iff N(u) is a subset of N[v] (non-strict, so a vertex
  with empty neighbourhood is surrounded by every other vertex).  A vertex is
  never reported as surrounding itself.
* A vertex is (first-order) redundant iff deleting it leaves every distance
  among the remaining vertices unchanged, unreachable pairs included.
* A graph is WEAK when no vertex is redundant and STRONG when every vertex is.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from .graph import (
    UNREACHABLE,
    Graph,
    bits,
    components,
    delete_vertex,
    distance_matrix,
    walk_count_matrix,
)


class GraphClass(str, enum.Enum):
    WEAK = "WEAK"
    STRONG = "STRONG"
    NEITHER = "NEITHER"


class LinkKind(str, enum.Enum):
    ADJACENT = "ADJACENT"
    STRONG_NONADJ = "STRONG_NONADJ"
    WEAK = "WEAK"
    NONE = "NONE"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for order {g.n}")


# ---------------------------------------------------------------------------
# surrounds and twins


def surrounds(g: Graph, v: int, u: int) -> bool:
    """True iff ``v`` surrounds ``u``: N(u) is contained in N[v]."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("surrounds() needs two distinct vertices")
    return g.adj[u] & ~(g.adj[v] | (1 << v)) == 0


def surrounded_mask(g: Graph) -> int:
    """Bitset of vertices surrounded by at least one other vertex."""
    adj = g.adj
    out = 0
    for u in range(g.n):
        nu = adj[u]
        for v in range(g.n):
            if v != u and nu & ~(adj[v] | (1 << v)) == 0:
                out |= 1 << u
                break
    return out


@dataclass(frozen=True)
class SurroundReport:
    n: int
    surrounds: np.ndarray  # surrounds[v, u]: v surrounds u
    surrounded: tuple[bool, ...]

    def pairs(self) -> list[tuple[int, int]]:
        """(v, u) pairs with v surrounding u."""
        return [(int(v), int(u)) for v, u in zip(*np.nonzero(self.surrounds))]


def surround_pairs_matrix(g: Graph) -> SurroundReport:
    """All surround pairs via the row-conjunction criterion.

    ``v`` surrounds ``u`` iff ``[a^2 + a]_{u,v} = d_u``.  Entry ``a^2[u, v]`` is the
    popcount of ``adj[u] & adj[v]``, so no matrix product is formed.
    """
    n = g.n
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    rel = np.zeros((n, n), dtype=bool)
    for u in range(n):
        au = adj[u]
        for v in range(n):
            if v != u and (au & adj[v]).bit_count() + ((au >> v) & 1) == deg[u]:
                rel[v, u] = True
    return SurroundReport(n, rel, tuple(bool(x) for x in rel.any(axis=0)))


@dataclass(frozen=True)
class TwinClasses:
    """Weak classes share open neighbourhoods, strong ones closed neighbourhoods."""

    weak: tuple[tuple[int, ...], ...]
    strong: tuple[tuple[int, ...], ...]
    untwinned: tuple[int, ...]

    @property
    def classes(self) -> list[tuple[str, tuple[int, ...]]]:
        return [("weak", c) for c in self.weak] + [("strong", c) for c in self.strong]

    def class_of(self, v: int) -> tuple[int, ...] | None:
        for c in self.weak + self.strong:
            if v in c:
                return c
        return None


def _sorted_row_groups(keys: list[int]) -> list[tuple[int, ...]]:
    order = sorted(range(len(keys)), key=lambda v: keys[v])
    groups = []
    i = 0
    while i < len(order):
        j = i + 1
        while j < len(order) and keys[order[j]] == keys[order[i]]:
            j += 1
        if j - i > 1:
            groups.append(tuple(sorted(order[i:j])))
        i = j
    return sorted(groups)


def twin_classes(g: Graph) -> TwinClasses:
    """Twins by sorting adjacency rows (then rows of a + I) as binary numbers."""
    weak = _sorted_row_groups(list(g.adj))
    strong = _sorted_row_groups([row | (1 << u) for u, row in enumerate(g.adj)])
    twinned = set()
    for c in weak + strong:
        twinned.update(c)
    return TwinClasses(tuple(weak), tuple(strong), tuple(v for v in range(g.n) if v not in twinned))


def twin_mask(g: Graph) -> int:
    seen_open: dict[int, int] = {}
    seen_closed: dict[int, int] = {}
    out = 0
    for u, row in enumerate(g.adj):
        for table, key in ((seen_open, row), (seen_closed, row | (1 << u))):
            w = table.get(key)
            if w is None:
                table[key] = u
            else:
                out |= (1 << u) | (1 << w)
    return out


# ---------------------------------------------------------------------------
# links and first-order redundancy


def link_kind(g: Graph, u: int, v: int) -> LinkKind:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise ValueError("link_kind() needs two distinct vertices")
    if g.has_edge(u, v):
        return LinkKind.ADJACENT
    common = (g.adj[u] & g.adj[v]).bit_count()
    if common >= 2:
        return LinkKind.STRONG_NONADJ
    if common == 1:
        return LinkKind.WEAK
    return LinkKind.NONE


def weak_pairs(g: Graph) -> list[tuple[int, int]]:
    adj = g.adj
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not (adj[u] >> v) & 1 and (adj[u] & adj[v]).bit_count() == 1:
                out.append((u, v))
    return out


def _redundant_first(adj, v: int) -> bool:
    nb = adj[v]
    notv = ~(1 << v)
    rest = nb
    while rest:
        low = rest & -rest
        x = low.bit_length() - 1
        rest ^= low
        ax = adj[x]
        # later neighbours of v not adjacent to x must share another neighbour with x
        others = rest & ~ax
        while others:
            lo = others & -others
            y = lo.bit_length() - 1
            others ^= lo
            if not (ax & adj[y] & notv):
                return False
    return True


def is_redundant_first(g: Graph, v: int) -> bool:
    """Neighbour-pair test: every two neighbours of ``v`` are adjacent or
    share a common neighbour other than ``v``."""
    _check_vertex(g, v)
    return _redundant_first(g.adj, v)


def redundant_mask(g: Graph) -> int:
    adj = g.adj
    out = 0
    for v in range(g.n):
        if _redundant_first(adj, v):
            out |= 1 << v
    return out


def is_redundant_oracle(g: Graph, v: int) -> bool:
    """Ground truth: compare distance matrices of ``g`` and ``g - v``."""
    _check_vertex(g, v)
    keep = [u for u in range(g.n) if u != v]
    return distance_matrix(g).restrict(keep) == distance_matrix(delete_vertex(g, v))


def kth_redundant_def(g: Graph, v: int, k: int) -> bool:
    """``v`` is k-th order redundant: deleting it preserves d(x, y) for all
    x, y with d(v, x) >= k, d(v, y) >= k and d(x, y) >= 2k."""
    _check_vertex(g, v)
    if k < 1:
        raise ValueError("order k must be >= 1")
    d = distance_matrix(g)
    keep = [u for u in range(g.n) if u != v]
    d2 = distance_matrix(delete_vertex(g, v))
    for i, x in enumerate(keep):
        if d[v, x] < k:
            continue
        for j in range(i + 1, len(keep)):
            y = keep[j]
            if d[v, y] < k or d[x, y] < 2 * k:
                continue
            if d2[i, j] != d[x, y]:
                return False
    return True


def kth_redundant_walks(g: Graph, v: int, k: int, *, walks=None, dist=None) -> bool:
    """Walk-count criterion: ``v`` is k-th order redundant iff
    w_2k(x, y) != w_k(x, v) * w_k(v, y) for all x, y at distance k from ``v``
    with d(x, y) = 2k."""
    _check_vertex(g, v)
    if k < 1:
        raise ValueError("order k must be >= 1")
    d = dist if dist is not None else distance_matrix(g)
    if walks is None:
        wk = walk_count_matrix(g, k)
        w2k = walk_count_matrix(g, 2 * k)
    else:
        wk, w2k = walks
    ring = [x for x in range(g.n) if d[v, x] == k]
    for i, x in enumerate(ring):
        for y in ring[i + 1 :]:
            if d[x, y] == 2 * k and int(w2k[x, y]) == int(wk[x, v]) * int(wk[v, y]):
                return False
    return True


def is_cut_vertex(g: Graph, v: int) -> bool:
    """Deleting ``v`` increases the number of components."""
    _check_vertex(g, v)
    return len(components(delete_vertex(g, v))) > len(components(g))


def is_strong_matrix(g: Graph) -> bool:
    """No entry of a^2 + 2(a + I) equals 1."""
    a = g.adjacency_matrix()
    m = a @ a + 2 * (a + np.eye(g.n, dtype=a.dtype))
    return not (m == 1).any()


# ---------------------------------------------------------------------------
# whole-graph report


@dataclass(frozen=True)
class RedundancyReport:
    n: int
    surrounded: tuple[bool, ...]
    twin: tuple[bool, ...]
    redundant: tuple[bool, ...]
    cut_vertex: tuple[bool, ...]
    graph_class: GraphClass
    counts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["graph_class"] = self.graph_class.value
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def classify_mask(g: Graph) -> GraphClass:
    """Graph class from the redundancy bitset alone."""
    r = redundant_mask(g)
    if r == (1 << g.n) - 1:
        return GraphClass.STRONG
    if r == 0:
        return GraphClass.WEAK
    return GraphClass.NEITHER


def classify(g: Graph) -> RedundancyReport:
    n = g.n
    red = redundant_mask(g)
    sur = surrounded_mask(g)
    tw = twin_mask(g)
    cut = [is_cut_vertex(g, v) for v in range(n)]
    by_flags = (
        GraphClass.STRONG if red == (1 << n) - 1 else GraphClass.WEAK if red == 0 else GraphClass.NEITHER
    )
    # n = 0 is both; report STRONG as the matrix test does
    if (by_flags is GraphClass.STRONG) != is_strong_matrix(g):
        raise AssertionError(f"STRONG tests disagree on {g!r}")
    flags = lambda m: tuple(bool((m >> v) & 1) for v in range(n))  # noqa: E731
    counts = {
        "surrounded": sur.bit_count(),
        "twin": tw.bit_count(),
        "redundant": red.bit_count(),
        "cut_vertex": sum(cut),
    }
    return RedundancyReport(n, flags(sur), flags(tw), flags(red), tuple(cut), by_flags, counts)


# ---------------------------------------------------------------------------
# chordless cycles


def chordless_cycle_witness(g: Graph, v: int, min_len: int = 5) -> list[int] | None:
    """An induced cycle of length >= ``min_len`` through ``v``, or None.

    Backtracking over induced paths starting at ``v``; exponential in the
    worst case, intended for small graphs.
    """
    _check_vertex(g, v)
    if min_len < 4:
        raise ValueError("min_len must be >= 4")
    adj = g.adj
    path = [v]

    def extend(body: int) -> list[int] | None:
        # body: path vertices except v and the last one; new vertices must avoid their neighbourhoods
        last = path[-1]
        for x in bits(adj[last] & ~body & ~(1 << v) & ~(1 << last)):
            if adj[x] & body:
                continue
            if len(path) > 1 and (adj[x] >> v) & 1:
                if len(path) + 1 >= min_len:
                    return path + [x]
                continue
            path.append(x)
            found = extend(body | ((1 << last) if len(path) > 2 else 0))
            if found:
                return found
            path.pop()
        return None

    return extend(0)


# ---------------------------------------------------------------------------
# isometric pruning


def non_twin_surrounded(g: Graph) -> list[int]:
    sur = surrounded_mask(g) & ~twin_mask(g)
    return list(bits(sur))


def prune_surrounded(g: Graph) -> tuple[Graph, list[int]]:
    """Delete all non-twin surrounded vertices; returns the graph and the
    surviving original labels."""
    doomed = non_twin_surrounded(g)
    keep = [v for v in range(g.n) if v not in set(doomed)]
    h = g
    for v in reversed(doomed):
        h = delete_vertex(h, v)
    return h, keep


def prune_twins(g: Graph) -> tuple[Graph, list[int]]:
    """Keep only the lowest-labelled member of every twin class."""
    tc = twin_classes(g)
    doomed = set()
    for c in tc.weak + tc.strong:
        doomed.update(c[1:])
    keep = [v for v in range(g.n) if v not in doomed]
    h = g
    for v in sorted(doomed, reverse=True):
        h = delete_vertex(h, v)
    return h, keep


def distances_preserved(g: Graph, h: Graph, keep: list[int]) -> bool:
    """``h`` is ``g`` restricted to ``keep`` with identical distances."""
    return distance_matrix(g).restrict(keep) == distance_matrix(h)


__all__ = [
    "UNREACHABLE",
    "GraphClass",
    "LinkKind",
    "RedundancyReport",
    "SurroundReport",
    "TwinClasses",
    "chordless_cycle_witness",
    "classify",
    "classify_mask",
    "is_cut_vertex",
    "is_redundant_first",
    "is_redundant_oracle",
    "is_strong_matrix",
    "kth_redundant_def",
    "kth_redundant_walks",
    "link_kind",
    "prune_surrounded",
    "prune_twins",
    "redundant_mask",
    "surround_pairs_matrix",
    "surrounded_mask",
    "surrounds",
    "twin_classes",
    "twin_mask",
    "weak_pairs",
]
