"""Graph surgeries: short, partial short, tensor product, merge, twin
splitting and the strong/weak supergraph constructions."""

from __future__ import annotations

import itertools
from typing import Mapping

from .graph import MAX_ORDER, Graph, add_vertex, bits, delete_vertex, distance_matrix
from .redundancy import redundant_mask

PARTIAL_SHORT_MAX_NBHD = 12


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for order {g.n}")


def add_edges(g: Graph, edges) -> Graph:
    adj = list(g.adj)
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, adj, check=False)


def toggle_edge(g: Graph, u: int, v: int) -> Graph:
    adj = list(g.adj)
    adj[u] ^= 1 << v
    adj[v] ^= 1 << u
    return Graph(g.n, adj, check=False)


def short(g: Graph, v: int) -> Graph:
    """Make N(v) a clique, then delete ``v``."""
    _check_vertex(g, v)
    nb = g.adj[v]
    adj = list(g.adj)
    for x in bits(nb):
        adj[x] |= nb & ~(1 << x)
    return delete_vertex(Graph(g.n, adj, check=False), v)


def partial_short_targets(g: Graph, v: int) -> dict[int, int]:
    """Required degree for each neighbour of ``v`` after a partial short.

    A neighbour ``x`` must end with degree at least ``min(2, deg(x))``, capped
    by what edges inside N(v) can supply.
    """
    nb = g.adj[v]
    out = {}
    for x in bits(nb):
        after = g.degree(x) - 1
        room = (nb & ~g.adj[x] & ~(1 << x)).bit_count()
        out[x] = min(2, g.degree(x), after + room)
    return out


def partial_short_edges(g: Graph, v: int) -> list[tuple[int, int]]:
    """Lexicographically least minimum edge set for ``partial_short``."""
    _check_vertex(g, v)
    nb = g.adj[v]
    if nb.bit_count() > PARTIAL_SHORT_MAX_NBHD:
        raise ValueError(f"partial short limited to |N(v)| <= {PARTIAL_SHORT_MAX_NBHD}")
    targets = partial_short_targets(g, v)
    deficit = {x: t - (g.degree(x) - 1) for x, t in targets.items() if t > g.degree(x) - 1}
    if not deficit:
        return []
    members = sorted(targets)
    candidates = [
        (x, y)
        for x, y in itertools.combinations(members, 2)
        if not g.has_edge(x, y) and (x in deficit or y in deficit)
    ]
    need = sum(deficit.values())
    for size in range((need + 1) // 2, len(deficit) * 2 + 1):
        for chosen in itertools.combinations(candidates, size):
            got = dict.fromkeys(deficit, 0)
            for x, y in chosen:
                if x in got:
                    got[x] += 1
                if y in got:
                    got[y] += 1
            if all(got[x] >= deficit[x] for x in deficit):
                return list(chosen)
    raise AssertionError("full short always satisfies the targets")


def partial_short(g: Graph, v: int) -> Graph:
    """Add the fewest edges inside N(v) so no neighbour drops below degree
    ``min(2, deg)``, then delete ``v``."""
    return delete_vertex(add_edges(g, partial_short_edges(g, v)), v)


def tensor_product(a: Graph, b: Graph) -> Graph:
    """Kronecker product; vertex (u, v) gets index ``u * b.n + v``."""
    n = a.n * b.n
    if n > MAX_ORDER:
        raise ValueError(f"product order {n} exceeds {MAX_ORDER}")
    rows = []
    for u in range(a.n):
        for v in range(b.n):
            r = 0
            for s in bits(a.adj[u]):
                r |= b.adj[v] << (s * b.n)
            rows.append(r)
    return Graph(n, rows, check=False)


class MergeError(ValueError):
    pass


def merge(a: Graph, b: Graph, correspondence: Mapping[int, int]) -> Graph:
    """Identify the induced subgraph of ``a`` on the correspondence domain with
    its image in ``b`` and take the union.

    ``a`` keeps labels ``0..a.n-1``; the unmatched vertices of ``b`` follow in
    increasing order.
    """
    dom = sorted(correspondence)
    image = [correspondence[x] for x in dom]
    if len(set(image)) != len(image):
        raise MergeError("correspondence is not injective")
    for x in dom:
        if not 0 <= x < a.n or not 0 <= correspondence[x] < b.n:
            raise MergeError(f"pair ({x}, {correspondence.get(x)}) out of range")
    for x, y in itertools.combinations(dom, 2):
        if a.has_edge(x, y) != b.has_edge(correspondence[x], correspondence[y]):
            raise MergeError(
                f"identified subgraphs differ at pair ({x}, {y}) -> "
                f"({correspondence[x]}, {correspondence[y]})"
            )
    to_new = {}
    inv = {bv: av for av, bv in correspondence.items()}
    nxt = a.n
    for w in range(b.n):
        if w in inv:
            to_new[w] = inv[w]
        else:
            to_new[w] = nxt
            nxt += 1
    edges = list(a.edges()) + [(to_new[x], to_new[y]) for x, y in b.edges()]
    return Graph.from_edges(nxt, edges)


def split_twin(g: Graph, v: int, kind: str = "weak") -> Graph:
    """Add vertex ``n`` as a weak (same N) or strong (same N[]) twin of ``v``."""
    _check_vertex(g, v)
    if kind not in ("weak", "strong"):
        raise ValueError("kind must be 'weak' or 'strong'")
    nbrs = g.adj[v] | ((1 << v) if kind == "strong" else 0)
    return add_vertex(g, nbrs)


def add_dominating_twins(g: Graph, k: int = 2) -> Graph:
    """Add ``k`` pairwise non-adjacent vertices, each adjacent to all of V(g).

    The result is STRONG whenever g has at least two vertices (for K1 it is
    a path of length 2).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if g.n + k > MAX_ORDER:
        raise ValueError(f"order {g.n + k} exceeds {MAX_ORDER}")
    full = (1 << g.n) - 1
    h = g
    for _ in range(k):
        h = add_vertex(h, full)
    return h


def strengthen_by_twin_split(g: Graph) -> Graph:
    """Weakly split every non-redundant vertex of ``g``, in label order.

    Each split uses the neighbourhood current at that moment, so twins added
    earlier are inherited.  The original vertices keep their labels.
    """
    red = redundant_mask(g)
    h = g
    for v in range(g.n):
        if not (red >> v) & 1:
            h = split_twin(h, v, "weak")
    return h


def spider_weaken(g: Graph) -> Graph:
    """Attach a spider so every vertex becomes non-redundant.

    With k >= 2 redundant vertices a star on k + 1 vertices is added
    (centre ``n``, leaves ``n+1..n+k``) and each redundant vertex is joined
    to its own leaf.  With k = 1 the one-legged star would leave its centre
    pendant, so the centre is instead also joined to the lowest vertex at
    distance >= 2 from the redundant vertex; the order bound n + k + 1 holds
    either way.
    """
    if any(row == 0 for row in g.adj):
        raise ValueError("spider construction needs a graph without isolated vertices")
    red = list(bits(redundant_mask(g)))
    k = len(red)
    if k == 0:
        return g
    n = g.n
    edges = list(g.edges())
    centre = n
    for i, r in enumerate(red):
        edges += [(r, n + 1 + i), (centre, n + 1 + i)]
    if k == 1:
        r = red[0]
        d = distance_matrix(g)
        far = [z for z in range(n) if d[r, z] >= 2]
        if not far:
            raise AssertionError("a lone redundant vertex cannot dominate the graph")
        edges.append((centre, far[0]))
    return Graph.from_edges(n + k + 1, edges)
