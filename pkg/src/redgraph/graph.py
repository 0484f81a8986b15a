"""Core graph type, distances and walk counts.

Adjacency is stored as one Python ``int`` per vertex, used as a bitset:
bit ``v`` of ``adj[u]`` is set iff ``{u, v}`` is an edge.  Python ints are
arbitrary precision, so the same representation serves 8-vertex corpus
graphs (single machine word) and 1000-vertex random graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 4096


@total_ordering
class _Unreachable:
    """Distance between vertices in different components.

    Compares greater than every finite distance and equal only to itself.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("redgraph.UNREACHABLE")

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        if check:
            full = (1 << n) - 1
            for u, row in enumerate(adj):
                if row < 0 or row & ~full:
                    raise ValueError(f"row {u} refers to vertices outside 0..{n - 1}")
                if (row >> u) & 1:
                    raise ValueError(f"self-loop at vertex {u}")
                for v in bits(row):
                    if not (adj[v] >> u) & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @classmethod
    def from_matrix(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("adjacency matrix must be square")
        packed = np.packbits(a.astype(bool), axis=1, bitorder="little")
        rows = [int.from_bytes(packed[u].tobytes(), "little") for u in range(n)]
        return cls(n, rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def closed_nbhd(self, u: int) -> int:
        return self.adj[u] | (1 << u)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a


def _rebuild(n, adj):
    return Graph(n, adj, check=False)


# ---------------------------------------------------------------------------
# distances


class DistanceMatrix:
    """All-pairs distances; indexing returns an ``int`` or ``UNREACHABLE``.

    Internally the entries live in an ``int32`` array with ``-1`` marking
    unreachable pairs, so bulk comparisons stay vectorised.
    """

    __slots__ = ("d",)

    def __init__(self, d: np.ndarray):
        self.d = d

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def __getitem__(self, uv):
        x = int(self.d[uv])
        return UNREACHABLE if x < 0 else x

    def __eq__(self, other) -> bool:
        return isinstance(other, DistanceMatrix) and np.array_equal(self.d, other.d)

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"

    def row(self, u: int) -> list:
        return [UNREACHABLE if x < 0 else int(x) for x in self.d[u]]

    def restrict(self, keep: Sequence[int]) -> "DistanceMatrix":
        idx = np.asarray(keep, dtype=np.intp)
        return DistanceMatrix(self.d[np.ix_(idx, idx)])

    @property
    def connected(self) -> bool:
        return not (self.d < 0).any()

    @property
    def diameter(self):
        if self.n == 0:
            return 0
        if (self.d < 0).any():
            return UNREACHABLE
        return int(self.d.max())


def bfs_layers(adj: Sequence[int], source: int) -> list[int]:
    """BFS from ``source``; returns the frontier bitsets, layer 0 first."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def eccentricity_rows(adj: Sequence[int], n: int) -> list[list[int]]:
    """Distance rows as plain lists, ``-1`` for unreachable."""
    out = []
    for s in range(n):
        row = [-1] * n
        for k, layer in enumerate(bfs_layers(adj, s)):
            for v in bits(layer):
                row[v] = k
        out.append(row)
    return out


def distance_matrix(g: Graph) -> DistanceMatrix:
    d = np.array(eccentricity_rows(g.adj, g.n), dtype=np.int32).reshape(g.n, g.n)
    return DistanceMatrix(d)


def diameter(g: Graph):
    """Diameter, or UNREACHABLE for a disconnected graph."""
    n = g.n
    if n == 0:
        return 0
    full = (1 << n) - 1
    best = 0
    for s in range(n):
        layers = bfs_layers(g.adj, s)
        reached = 0
        for layer in layers:
            reached |= layer
        if reached != full:
            return UNREACHABLE
        best = max(best, len(layers) - 1)
    return best


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitsets, ordered by least vertex."""
    left = (1 << g.n) - 1
    out = []
    while left:
        s = (left & -left).bit_length() - 1
        comp = 0
        for layer in bfs_layers(g.adj, s):
            comp |= layer
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components(g)) == 1


# ---------------------------------------------------------------------------
# walks

_U64_MAX = (1 << 64) - 1


def walk_count_matrix(g: Graph, k: int) -> np.ndarray:
    """Number of ``k``-walks between every ordered pair, as ``uint64``.

    Raises ``OverflowError`` rather than wrapping when a count exceeds 64 bits.
    """
    if k < 0:
        raise ValueError("walk length must be non-negative")
    n = g.n
    a = g.adjacency_matrix(np.uint64)
    w = np.eye(n, dtype=np.uint64)
    maxdeg = max(g.degrees(), default=0)
    for step in range(k):
        # each entry of w @ a sums at most maxdeg entries of w
        if int(w.max(initial=0)) * maxdeg > _U64_MAX:
            exact = w.astype(object).dot(a.astype(object))
            if max((int(x) for x in exact.flat), default=0) > _U64_MAX:
                raise OverflowError(f"{k}-walk counts exceed 64 bits (at length {step + 1})")
            w = exact.astype(np.uint64)
        else:
            w = w @ a
    return w


# ---------------------------------------------------------------------------
# surgery


def delete_vertex(g: Graph, v: int) -> Graph:
    """``g - v`` with vertices above ``v`` shifted down by one."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for order {g.n}")
    low = (1 << v) - 1
    rows = []
    for u, row in enumerate(g.adj):
        if u == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, rows, check=False)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertices relabelled in increasing order."""
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for order {g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    mask = 0
    for v in keep:
        mask |= 1 << v
    rows = []
    for v in keep:
        r = 0
        for w in bits(g.adj[v] & mask):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph(len(keep), rows, check=False)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << u) for u, row in enumerate(g.adj)], check=False)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``u`` renamed ``perm[u]``."""
    rows = [0] * g.n
    for u, row in enumerate(g.adj):
        r = 0
        for v in bits(row):
            r |= 1 << perm[v]
        rows[perm[u]] = r
    return Graph(g.n, rows, check=False)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    return Graph(a.n + b.n, list(a.adj) + [row << a.n for row in b.adj], check=False)


def add_vertex(g: Graph, nbrs: int) -> Graph:
    """Append vertex ``n`` adjacent to the bitset ``nbrs``."""
    n = g.n
    rows = [row | (((nbrs >> u) & 1) << n) for u, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(n + 1, rows, check=False)


# ---------------------------------------------------------------------------
# metrics


@dataclass(frozen=True)
class Metrics:
    connected: bool
    diameter: object
    girth: int | None
    degree_sequence: tuple[int, ...]


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, ``None`` for a forest."""
    best = None
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for u in queue:
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def metrics(g: Graph) -> Metrics:
    dm = distance_matrix(g)
    return Metrics(
        connected=dm.connected,
        diameter=dm.diameter,
        girth=girth(g),
        degree_sequence=tuple(sorted(g.degrees())),
    )
