"""Exhaustive small-graph enumeration and the derived statistics.

Graphs of order n are produced from those of order n - 1 by adding a vertex
of minimum degree (every graph arises this way: delete a vertex of least
degree) and deduplicating by canonical key.  The Polya count of unlabelled
graphs is an independent check on the generator.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .canonical import canonical_form, canonical_key
from .graph import UNREACHABLE, Graph, add_vertex, bits, delete_vertex, diameter, distance_matrix, is_connected
from .graph6 import from_graph6, to_graph6
from .redundancy import redundant_mask, surrounded_mask, weak_pairs

log = logging.getLogger(__name__)

MAX_N = 10

# ---------------------------------------------------------------------------
# generation


def _children(parent_g6: str) -> dict[bytes, str]:
    p = from_graph6(parent_g6)
    m = p.n
    deg = p.degrees()
    mindeg = min(deg, default=0)
    out: dict[bytes, str] = {}
    for nbrs in range(1 << m):
        k = nbrs.bit_count()
        if k > mindeg + 1:
            continue
        # the new vertex must have minimum degree in the child
        if any(deg[u] + ((nbrs >> u) & 1) < k for u in range(m)):
            continue
        c = canonical_form(add_vertex(p, nbrs))
        key = to_graph6(c)
        out.setdefault(key.encode(), key)
    return out


def _extend(parents: list[str], workers: int = 1) -> list[str]:
    seen: dict[bytes, str] = {}
    if workers > 1 and len(parents) > 64:
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_children, parents, chunksize=64):
                seen.update(part)
    else:
        for p in parents:
            seen.update(_children(p))
    return sorted(seen.values())


def _cache_file(cache_dir, n: int) -> Path | None:
    if cache_dir is None:
        return None
    return Path(cache_dir) / f"graphs_n{n}.g6"


@lru_cache(maxsize=None)
def _level(n: int, cache_dir: str | None = None, workers: int = 1) -> tuple[str, ...]:
    if n < 0:
        raise ValueError("order must be >= 0")
    if n > MAX_N:
        raise ValueError(f"exhaustive generation is limited to n <= {MAX_N}")
    path = _cache_file(cache_dir, n)
    if path is not None and path.exists():
        return tuple(line.strip() for line in path.read_text().splitlines() if line.strip())
    if n == 0:
        level = [to_graph6(Graph(0, []))]
    else:
        if n >= 9:
            log.warning("generating all graphs of order %d; this takes a while", n)
        level = _extend(list(_level(n - 1, cache_dir, workers)), workers)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("".join(s + "\n" for s in level))
        os.replace(tmp, path)
    return tuple(level)


def generate_all(n: int, *, cache_dir: str | None = None, workers: int = 1) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of order ``n``."""
    if cache_dir is not None:
        cache_dir = str(cache_dir)
    for s in _level(n, cache_dir, workers):
        yield from_graph6(s)


def generate_connected(n: int, **kw) -> Iterator[Graph]:
    return (g for g in generate_all(n, **kw) if is_connected(g))


# ---------------------------------------------------------------------------
# counting


def _partitions(n: int, largest: int | None = None) -> Iterator[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


@lru_cache(maxsize=None)
def polya_graph_count(n: int) -> int:
    """Number of unlabelled simple graphs of order ``n`` (0 for n < 0).

    Burnside over the pair action of S_n: for a cycle type with parts
    k_i the pair permutation has sum(k_i // 2) + sum_{i<j} gcd(k_i, k_j)
    cycles.
    """
    if n < 0:
        return 0
    if n > 40:
        raise ValueError("polya_graph_count supports n <= 40")
    total = Fraction(0)
    for lam in _partitions(n):
        mult = Counter(lam)
        z = 1
        for k, m in mult.items():
            z *= k**m * math.factorial(m)
        c = sum(k // 2 for k in lam)
        c += sum(math.gcd(a, b) for a, b in itertools.combinations(lam, 2))
        total += Fraction(2**c, z)
    assert total.denominator == 1
    return int(total)


def _signed_distinct_partitions(n: int) -> list[int]:
    """D[m] = sum over sets S of distinct positive parts summing to m of (-1)^|S|."""
    d = [0] * (n + 1)
    d[0] = 1
    for part in range(1, n + 1):
        for m in range(n, part - 1, -1):
            d[m] -= d[m - part]
    return d


def kappa(n: int, g=polya_graph_count) -> int:
    """Graphs of order ``n`` with at least one complete-graph component.

    Inclusion-exclusion over sets of distinct component sizes, grouped by
    their total ``m``: kappa_n = sum_m -D[m] * g_{n-m}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = _signed_distinct_partitions(n)
    return sum(-d[m] * g(n - m) for m in range(1, n + 1))


def kappa_strong(n: int, d3count: int) -> int:
    """kappa_n with the g_{n-1} term replaced by ``d3count``, the number of
    order-(n-1) graphs of diameter < 3."""
    # only S = {1} sums to 1, so g_{n-1} appears once with sign +
    return kappa(n) - polya_graph_count(n - 1) + d3count


def diameter_lt3_count(n: int, **kw) -> int:
    """Graphs of order ``n`` with diameter 0, 1 or 2 (connected or trivial)."""
    if n == 0:
        return 1
    return sum(1 for g in generate_all(n, **kw) if diameter(g) < 3)


def kappa_strong_candidates(n: int, **kw) -> dict[str, int]:
    """Both readings of the g_{n-1} substitution.

    ``all_diam_lt3`` counts every order-(n-1) graph of diameter < 3;
    ``connected_or_k1`` counts connected order-(n-1) graphs (plus K1) of
    diameter < 3.  For n - 1 >= 2 they coincide, since finite diameter
    forces connectivity.
    """
    m = n - 1
    all_d3 = diameter_lt3_count(m, **kw)
    if m <= 1:
        conn = 1
    else:
        conn = sum(1 for g in generate_all(m, **kw) if is_connected(g) and diameter(g) < 3)
    return {"all_diam_lt3": kappa_strong(n, all_d3), "connected_or_k1": kappa_strong(n, conn)}


def strong_diameter_lt3_count(n: int, **kw) -> int:
    """Connected STRONG graphs of order ``n`` with diameter < 3."""
    full = (1 << n) - 1
    return sum(1 for g in generate_all(n, **kw) if redundant_mask(g) == full and diameter(g) < 3)


# ---------------------------------------------------------------------------
# statistics tables


@dataclass(frozen=True)
class StatsRow:
    n: int
    no_surrounded: int
    all_surrounded: int
    no_redundant: int
    all_redundant: int
    redundant_not_surrounded: int
    redundant_not_surrounded_diam_gt2: int
    connected_only: bool
    total: int = 0

    def counts(self) -> tuple[int, ...]:
        return (
            self.no_surrounded,
            self.all_surrounded,
            self.no_redundant,
            self.all_redundant,
            self.redundant_not_surrounded,
            self.redundant_not_surrounded_diam_gt2,
        )

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_row(self) -> list:
        return list(asdict(self).values())


@dataclass
class EnumConfig:
    n_max: int
    connected_only: bool = False
    workers: int = 1
    checkpoint: str | None = None
    n_min: int = 1

    def __post_init__(self):
        if self.n_max > MAX_N:
            raise ValueError(f"n_max is limited to {MAX_N}")
        if self.n_max > 9:
            log.warning("n_max=%d: generation at n=10 needs hours and several GB", self.n_max)


def graph_flags(g: Graph) -> tuple[bool, bool, bool, bool, bool, bool, bool]:
    """(connected, no s., all s., no r., all r., r not s., r not s. D>2)."""
    full = (1 << g.n) - 1
    s = surrounded_mask(g)
    r = redundant_mask(g)
    d = diameter(g)
    rns = r == full and s == 0
    return (
        d is not UNREACHABLE,
        s == 0,
        s == full,
        r == 0,
        r == full,
        rns,
        rns and d > 2,
    )


def _flags_for(g6: str):
    return graph_flags(from_graph6(g6))


def stats_rows(n: int, *, workers: int = 1, cache_dir: str | None = None) -> tuple[StatsRow, StatsRow]:
    """(all graphs, connected graphs) rows for order ``n``."""
    graphs = _level(n, None if cache_dir is None else str(cache_dir), workers)
    if workers > 1 and len(graphs) > 1000:
        with ProcessPoolExecutor(workers) as pool:
            flags = list(pool.map(_flags_for, graphs, chunksize=512))
    else:
        flags = [_flags_for(s) for s in graphs]
    tot_all = [0] * 6
    tot_con = [0] * 6
    ncon = 0
    for f in flags:
        for i in range(6):
            tot_all[i] += f[i + 1]
        if f[0]:
            ncon += 1
            for i in range(6):
                tot_con[i] += f[i + 1]
    return (
        StatsRow(n, *tot_all, connected_only=False, total=len(flags)),
        StatsRow(n, *tot_con, connected_only=True, total=ncon),
    )


def stats_table(config: EnumConfig) -> list[StatsRow]:
    rows = []
    for n in range(config.n_min, config.n_max + 1):
        all_row, con_row = stats_rows(n, workers=config.workers, cache_dir=config.checkpoint)
        rows.append(con_row if config.connected_only else all_row)
    return rows


# ---------------------------------------------------------------------------
# weak graphs


def weak_graphs(n: int, *, connected: bool = False, **kw) -> Iterator[Graph]:
    for g in generate_all(n, **kw):
        if n > 0 and redundant_mask(g) == 0 and (not connected or is_connected(g)):
            yield g


def strong_graphs(n: int, **kw) -> Iterator[Graph]:
    full = (1 << n) - 1
    for g in generate_all(n, **kw):
        if redundant_mask(g) == full:
            yield g


def max_weak_edges(n: int, **kw) -> tuple[int, int]:
    """(largest edge count of a WEAK graph of order n, C(n,2) - that count)."""
    best = max((g.num_edges() for g in weak_graphs(n, **kw)), default=None)
    if best is None:
        raise ValueError(f"no weak graph of order {n}")
    return best, n * (n - 1) // 2 - best


# ---------------------------------------------------------------------------
# generation filters


def filter_no_surrounded_by_redundant(g: Graph) -> bool:
    """No vertex is surrounded by a redundant vertex."""
    red = redundant_mask(g)
    adj = g.adj
    for u in range(g.n):
        for w in bits(red & ~(1 << u)):
            if adj[u] & ~(adj[w] | (1 << w)) == 0:
                return False
    return True


def filter_weaklinks_within2(g: Graph) -> bool:
    """Vertices in at least one weak link are pairwise within distance 2."""
    s = set()
    for u, v in weak_pairs(g):
        s.update((u, v))
    if len(s) < 2:
        return True
    d = distance_matrix(g)
    return all(d[u, v] <= 2 for u, v in itertools.combinations(sorted(s), 2))


# ---------------------------------------------------------------------------
# diameter probe


def diameter_probe(n_max: int = 8, **kw) -> dict:
    """Max diameter of all-redundant, none-surrounded graphs per order, and
    whether the order-8 maximisers contain the 3-cube as a spanning subgraph.
    Reported, not asserted."""
    from .named import hypercube

    out = {"max_diameter": {}, "log2_floor": {}}
    maximisers = []
    for n in range(1, n_max + 1):
        full = (1 << n) - 1
        best = None
        top = []
        for g in generate_all(n, **kw):
            if redundant_mask(g) == full and surrounded_mask(g) == 0:
                d = diameter(g)
                if d is UNREACHABLE:
                    continue
                if best is None or d > best:
                    best, top = d, [g]
                elif d == best:
                    top.append(g)
        out["max_diameter"][n] = best
        out["log2_floor"][n] = int(math.log2(n))
        if n == 8:
            maximisers = top
    if n_max >= 8:
        cube = canonical_key(hypercube(3))
        contains = []
        for g in maximisers:
            edges = list(g.edges())
            hit = any(
                canonical_key(Graph.from_edges(8, sub)) == cube for sub in itertools.combinations(edges, 12)
            )
            contains.append((to_graph6(g), hit))
        out["n8_maximisers_contain_cube"] = contains
    return out


def deletions(g: Graph) -> Iterator[Graph]:
    for v in range(g.n):
        yield delete_vertex(g, v)
