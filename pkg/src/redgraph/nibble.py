"""Nibbling: repeated deletion of a redundant vertex until the graph is
empty or weak, plus lattice (mesh) graphs and the mesh distance query.

Vertices keep their original labels throughout a nibble; the working graph
is a list of bitsets indexed by original label with deleted rows cleared.
Deleting ``v`` can only change the redundancy of vertices within distance 2
of ``v``, so only those are re-tested after each step.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from typing import Iterable

from .canonical import canonical_key
from .graph import UNREACHABLE, Graph, bfs_layers, bits, delete_vertex, distance_matrix, induced_subgraph
from .redundancy import GraphClass, _redundant_first, redundant_mask


class Selector(str, enum.Enum):
    FIRST_INDEX = "FIRST_INDEX"
    MIN_DEGREE_THEN_INDEX = "MIN_DEGREE_THEN_INDEX"
    EXHAUSTIVE_SEARCH = "EXHAUSTIVE_SEARCH"


@dataclass(frozen=True)
class NibblePolicy:
    selector: Selector = Selector.MIN_DEGREE_THEN_INDEX
    seed: int | None = None


class FinalClass(str, enum.Enum):
    WEAK = "WEAK"
    EMPTY = "EMPTY"


@dataclass
class NibbleTrace:
    deletions: list[int]
    final: Graph
    final_labels: list[int]
    final_class: FinalClass
    steps_isometric: bool | None = None
    audited_steps: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        from .graph6 import to_graph6

        return {
            "deletions": self.deletions,
            "final": to_graph6(self.final),
            "final_labels": self.final_labels,
            "final_class": self.final_class.value,
            "steps_isometric": self.steps_isometric,
            "audited_steps": self.audited_steps,
        }


class _Undecided:
    def __repr__(self):
        return "UNDECIDED"

    def __bool__(self):
        raise TypeError("UNDECIDED has no truth value")


UNDECIDED = _Undecided()


class _Nibbler:
    """Mutable working state for one nibble run."""

    def __init__(self, g: Graph):
        self.adj = list(g.adj)
        self.alive = (1 << g.n) - 1
        self.red = redundant_mask(g)

    def delete(self, v: int) -> None:
        adj = self.adj
        near = adj[v]
        for x in bits(adj[v]):
            near |= adj[x]
        near &= ~(1 << v)
        for x in bits(adj[v]):
            adj[x] &= ~(1 << v)
        adj[v] = 0
        self.alive &= ~(1 << v)
        self.red &= ~(1 << v)
        for w in bits(near):
            if _redundant_first(adj, w):
                self.red |= 1 << w
            else:
                self.red &= ~(1 << w)


def _choose(state: _Nibbler, selector: Selector, rng: random.Random | None) -> int:
    cands = list(bits(state.red))
    if selector is Selector.FIRST_INDEX:
        pool = cands
        if rng is None:
            return pool[0]
    else:
        best = min(state.adj[v].bit_count() for v in cands)
        pool = [v for v in cands if state.adj[v].bit_count() == best]
        if rng is None:
            return pool[0]
    return rng.choice(pool)


def _greedy(g: Graph, selector: Selector, seed: int | None) -> list[int]:
    rng = random.Random(seed) if seed is not None else None
    st = _Nibbler(g)
    order = []
    while st.red:
        v = _choose(st, selector, rng)
        order.append(v)
        st.delete(v)
    return order


def _search_zero(g: Graph, budget: int, memo: dict, need_path: bool = True) -> list[int] | None:
    """Deletion order (original labels) emptying ``g``, or None.

    Raises ``_BudgetExceeded`` when more than ``budget`` nodes are expanded.
    """
    counter = [0]

    def rec(h: Graph, labels: list[int]) -> list[int] | None:
        if h.n == 0:
            return []
        key = canonical_key(h)
        known = memo.get(key)
        if known is False:
            return None
        if known and not need_path:
            return []
        counter[0] += 1
        if counter[0] > budget:
            raise _BudgetExceeded
        red = redundant_mask(h)
        tried = set()
        for v in bits(red):
            child = delete_vertex(h, v)
            ck = canonical_key(child) if child.n else b""
            if ck in tried:
                continue
            tried.add(ck)
            sub = rec(child, labels[:v] + labels[v + 1 :])
            if sub is not None:
                memo[key] = True
                return [labels[v]] + sub
        memo[key] = False
        return None

    return rec(g, list(range(g.n)))


class _BudgetExceeded(Exception):
    pass


def replay(g: Graph, deletions: Iterable[int]) -> tuple[Graph, list[int]]:
    """Apply a deletion sequence (original labels); returns the induced
    remainder and its original labels."""
    gone = set(deletions)
    keep = [v for v in range(g.n) if v not in gone]
    return induced_subgraph(g, keep), keep


def audit_steps(g: Graph, deletions: list[int], steps: Iterable[int] | None = None) -> bool:
    """Check that each listed step deleted a redundant vertex isometrically,
    using full distance matrices (not the neighbour-pair test)."""
    steps = range(len(deletions)) if steps is None else steps
    for i in steps:
        before = set(deletions[:i])
        keep = [v for v in range(g.n) if v not in before]
        v = deletions[i]
        h = induced_subgraph(g, keep)
        after = [u for u in keep if u != v]
        idx = [keep.index(u) for u in after]
        if distance_matrix(h).restrict(idx) != distance_matrix(induced_subgraph(g, after)):
            return False
    return True


def nibble(
    g: Graph,
    policy: NibblePolicy = NibblePolicy(),
    *,
    audit: float | bool = False,
    budget: int = 10**6,
    memo: dict | None = None,
) -> NibbleTrace:
    """Delete redundant vertices until none remain.

    ``audit`` selects steps whose isometry is certified with distance
    matrices: ``True`` for all, a float for that fraction (seeded by the
    policy seed), ``False`` for none.  EXHAUSTIVE_SEARCH returns an emptying
    sequence when one exists (within ``budget``), otherwise the
    MIN_DEGREE_THEN_INDEX trace.
    """
    sel = Selector(policy.selector)
    order = None
    if sel is Selector.EXHAUSTIVE_SEARCH:
        try:
            order = _search_zero(g, budget, {} if memo is None else memo)
        except _BudgetExceeded:
            order = None
        if order is None:
            order = _greedy(g, Selector.MIN_DEGREE_THEN_INDEX, policy.seed)
    else:
        order = _greedy(g, sel, policy.seed)

    final, labels = replay(g, order)
    trace = NibbleTrace(order, final, labels, FinalClass.EMPTY if final.n == 0 else FinalClass.WEAK)
    if audit:
        if audit is True:
            steps = list(range(len(order)))
        else:
            rng = random.Random(policy.seed if policy.seed is not None else 0)
            steps = [i for i in range(len(order)) if rng.random() < float(audit)]
        trace.audited_steps = steps
        trace.steps_isometric = audit_steps(g, order, steps)
    return trace


def nibbles_to_zero(g: Graph, budget: int = 10**6, memo: dict | None = None):
    """True iff some sequence of redundant-vertex deletions empties ``g``.

    Returns UNDECIDED if the search expands more than ``budget`` nodes.
    ``memo`` (canonical key -> bool) may be shared across calls.
    """
    if g.n and redundant_mask(g) == 0:
        return False
    if len(_greedy(g, Selector.MIN_DEGREE_THEN_INDEX, None)) == g.n:
        return True
    try:
        return _search_zero(g, budget, {} if memo is None else memo, need_path=False) is not None
    except _BudgetExceeded:
        return UNDECIDED


# ---------------------------------------------------------------------------
# meshes


class MeshKind(str, enum.Enum):
    TRIANGULAR = "tri"
    SQUARE = "sq"
    HEXAGONAL = "hex"


@dataclass(frozen=True)
class MeshSpec:
    """A finite patch of a planar tiling.

    Cell coordinates:

    * SQUARE: cell (r, c) has corners (r, c), (r, c+1), (r+1, c), (r+1, c+1).
    * TRIANGULAR: lattice points (r, k) with neighbours (r, k+-1), (r+-1, k),
      (r-1, k+1), (r+1, k-1).  Row r of cells is the strip between point
      rows r and r+1; even c = 2k is the up-triangle (r,k), (r,k+1), (r+1,k)
      and odd c = 2k+1 the down-triangle (r,k+1), (r+1,k), (r+1,k+1).
    * HEXAGONAL: brick-wall honeycomb; cell (r, c) spans point rows r, r+1
      and columns x..x+2 with x = 2c + (r mod 2).
    """

    kind: MeshKind
    mask: frozenset

    def __init__(self, kind, mask):
        object.__setattr__(self, "kind", MeshKind(kind))
        object.__setattr__(self, "mask", frozenset((int(r), int(c)) for r, c in mask))


def _cell_geometry(kind: MeshKind, r: int, c: int):
    """(corner points, edges) of one cell."""
    if kind is MeshKind.SQUARE:
        p = [(r, c), (r, c + 1), (r + 1, c + 1), (r + 1, c)]
        return p, [(p[i], p[(i + 1) % 4]) for i in range(4)]
    if kind is MeshKind.TRIANGULAR:
        k = c // 2
        if c % 2 == 0:
            p = [(r, k), (r, k + 1), (r + 1, k)]
        else:
            p = [(r, k + 1), (r + 1, k), (r + 1, k + 1)]
        return p, [(p[0], p[1]), (p[1], p[2]), (p[0], p[2])]
    x = 2 * c + (r % 2)
    top = [(r, x), (r, x + 1), (r, x + 2)]
    bot = [(r + 1, x), (r + 1, x + 1), (r + 1, x + 2)]
    edges = [(top[0], top[1]), (top[1], top[2]), (bot[0], bot[1]), (bot[1], bot[2])]
    edges += [(top[0], bot[0]), (top[2], bot[2])]
    return top + bot, edges


def mesh_graph(spec: MeshSpec) -> tuple[Graph, list[tuple[int, int]]]:
    """Graph of the tiled region; vertices are lattice points in sorted order."""
    if not spec.mask:
        raise ValueError("mesh mask is empty")
    points = set()
    edge_pts = set()
    for r, c in spec.mask:
        p, e = _cell_geometry(spec.kind, r, c)
        points.update(p)
        for a, b in e:
            edge_pts.add((min(a, b), max(a, b)))
    coords = sorted(points)
    index = {p: i for i, p in enumerate(coords)}
    return Graph.from_edges(len(coords), [(index[a], index[b]) for a, b in edge_pts]), coords


def _incident_cells(kind: MeshKind, point) -> list[tuple[int, int]]:
    r, k = point
    if kind is MeshKind.SQUARE:
        return [(r - 1, k - 1), (r - 1, k), (r, k - 1), (r, k)]
    if kind is MeshKind.TRIANGULAR:
        # up (r,k), down (r-1,k-1), up (r-1,k), down (r-1,k)... enumerate by geometry
        cand = [(rr, cc) for rr in (r - 1, r) for cc in range(2 * k - 3, 2 * k + 3)]
        return [cell for cell in cand if point in _cell_geometry(kind, *cell)[0]]
    cand = [(rr, cc) for rr in (r - 1, r) for cc in range((k - 3) // 2, k // 2 + 2)]
    return [cell for cell in cand if point in _cell_geometry(kind, *cell)[0]]


def is_interior(spec: MeshSpec, point) -> bool:
    return all(cell in spec.mask for cell in _incident_cells(spec.kind, tuple(point)))


class MeshQueryError(ValueError):
    pass


def mesh_distance_query(spec: MeshSpec, s, t, policy: NibblePolicy = NibblePolicy()):
    """Distance between interior lattice points ``s`` and ``t`` by nibbling.

    Both endpoints are deleted, the rest is nibbled until weak, and the
    distance is 2 plus the least distance in the nibbled graph between a
    surviving former neighbour of ``s`` and one of ``t``.
    """
    s, t = tuple(s), tuple(t)
    g, coords = mesh_graph(spec)
    index = {p: i for i, p in enumerate(coords)}
    for p in (s, t):
        if p not in index or not is_interior(spec, p):
            raise MeshQueryError(f"{p} is not an interior point of the mesh; use plain BFS")
    if s == t:
        raise MeshQueryError("endpoints coincide; the distance is 0")
    si, ti = index[s], index[t]
    if g.has_edge(si, ti):
        raise MeshQueryError("endpoints are adjacent; the distance is 1, use plain BFS")

    rest = [v for v in range(g.n) if v not in (si, ti)]
    h = induced_subgraph(g, rest)
    trace = nibble(h, policy)
    survivors = [rest[i] for i in trace.final_labels]
    pos = {v: i for i, v in enumerate(survivors)}
    src = 0
    dst = 0
    for x in bits(g.adj[si]):
        if x in pos:
            src |= 1 << pos[x]
    for x in bits(g.adj[ti]):
        if x in pos:
            dst |= 1 << pos[x]
    if not src or not dst:
        return UNREACHABLE
    # multi-source BFS from the surviving ring of s
    adj = trace.final.adj
    seen = src
    frontier = src
    dist = 0
    while frontier:
        if frontier & dst:
            return dist + 2
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        dist += 1
    return UNREACHABLE


def bfs_distance(g: Graph, s: int, t: int):
    for k, layer in enumerate(bfs_layers(g.adj, s)):
        if (layer >> t) & 1:
            return k
    return UNREACHABLE


def read_mask(lines: Iterable[str]) -> frozenset:
    """Mask file: one ``row col`` pair per line; blank lines and ``#`` comments skipped."""
    cells = set()
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"mask line {lineno}: expected 'row col', got {line!r}")
        cells.add((int(parts[0]), int(parts[1])))
    return frozenset(cells)


def rectangle(rows: int, cols: int) -> frozenset:
    return frozenset((r, c) for r in range(rows) for c in range(cols))


__all__ = [
    "FinalClass",
    "GraphClass",
    "MeshKind",
    "MeshSpec",
    "NibblePolicy",
    "NibbleTrace",
    "Selector",
    "UNDECIDED",
    "audit_steps",
    "bfs_distance",
    "is_interior",
    "mesh_distance_query",
    "mesh_graph",
    "nibble",
    "nibbles_to_zero",
    "read_mask",
    "rectangle",
    "replay",
]
