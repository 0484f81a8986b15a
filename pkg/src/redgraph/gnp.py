"""G(n, p) sampling, Monte-Carlo scans and the analytic approximations.

Large samples are analysed on dense numpy matrices rather than bitsets:
redundancy comes from the weak-link matrix (pairs with exactly one common
neighbour, non-adjacent), distances from repeated boolean products.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph

PMF_CUTOFF = 1e-15


# ---------------------------------------------------------------------------
# sampling


def _rng(seed, *cell) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed) & (2**64 - 1), *cell]))


def gnp_matrix(n: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Symmetric boolean adjacency matrix with independent edges."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return upper | upper.T


def gnp_sample(n: int, p: float, seed: int) -> Graph:
    return Graph.from_matrix(gnp_matrix(n, p, _rng(seed)))


# ---------------------------------------------------------------------------
# formulas


def binom_pmf(n: int, k: int, p: float) -> float:
    """C(n, k) p^k (1-p)^(n-k), evaluated in log space."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if p == 0.0:
        return 1.0 if k == 0 else 0.0
    if p == 1.0:
        return 1.0 if k == n else 0.0
    logc = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    return math.exp(logc + k * math.log(p) + (n - k) * math.log1p(-p))


def p_red_formula(n: int, p: float) -> float:
    """Approximate probability that a given vertex of G(n, p) is redundant.

    Sums over the degree d of the vertex; each of its C(d, 2) neighbour pairs
    must be adjacent or share another neighbour, treated as independent
    events.  Terms with binomial weight below 1e-15 are dropped, so the
    truncation error is below n * 1e-15.  The independence assumption makes
    this an underestimate (by roughly a factor 2 near the minimum).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    q = p + (1.0 - p) * (1.0 - (1.0 - p * p) ** (n - 3))
    total = binom_pmf(n - 1, 0, p) + binom_pmf(n - 1, 1, p)
    for d in range(2, n):
        w = binom_pmf(n - 1, d, p)
        if w < PMF_CUTOFF:
            continue
        pairs = d * (d - 1) // 2
        total += w * (q**pairs if q > 0 else 0.0)
    return min(total, 1.0)


def p_diam_le2(n: int, p: float) -> float:
    """Probability that every pair is adjacent or has a common neighbour,
    with pairs treated as independent."""
    if n < 2:
        raise ValueError("n must be >= 2")
    per_pair = 1.0 - (1.0 - p) * (1.0 - p * p) ** (n - 2)
    return per_pair ** (n * (n - 1) // 2)


@dataclass(frozen=True)
class ThresholdSet:
    n: int
    L: float
    connected_p: float
    weak_p: float
    weak_end_p: float
    diam2_p: float
    strong_p: float

    def ordered(self) -> list[float]:
        return [self.connected_p, self.weak_p, self.weak_end_p, self.diam2_p, self.strong_p]


def thresholds(n: int) -> ThresholdSet:
    """Threshold curves with L = ln(n) / n (natural log)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    L = math.log(n) / n
    return ThresholdSet(n, L, L, 1.25 * L, math.sqrt(L), math.sqrt(2 * L), math.sqrt(2.5 * L))


# ---------------------------------------------------------------------------
# per-sample analysis


def distances_dense(a: np.ndarray) -> np.ndarray:
    """All-pairs distances of a connected graph by boolean matrix powers."""
    n = a.shape[0]
    af = a.astype(np.float32)
    reach = a | np.eye(n, dtype=bool)
    d = np.where(a, 1, 0).astype(np.int32)
    k = 1
    while not reach.all():
        new = ((reach.astype(np.float32) @ af) > 0) | reach
        fresh = new & ~reach
        if not fresh.any():
            d[~reach] = -1
            return d
        k += 1
        d[fresh] = k
        reach = new
    return d


def redundant_vector(a: np.ndarray) -> np.ndarray:
    """Boolean vector: vertex v has no weakly linked pair of neighbours."""
    n = a.shape[0]
    af = a.astype(np.float32)
    a2 = af @ af
    weak = (a2 == 1) & ~a
    np.fill_diagonal(weak, False)
    hits = ((af @ weak.astype(np.float32)) * af).sum(axis=1)
    return hits == 0


def second_order_redundant_vector(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """k = 2 redundancy by walk counts: v fails iff some x, y at distance 2
    from v with d(x, y) = 4 have w4(x, y) = w2(x, v) * w2(v, y)."""
    af = a.astype(np.float64)
    w2 = af @ af
    w4 = w2 @ w2
    n = a.shape[0]
    out = np.ones(n, dtype=bool)
    for v in range(n):
        ring = np.flatnonzero(d[v] == 2)
        if ring.size < 2:
            continue
        far = d[np.ix_(ring, ring)] == 4
        if not far.any():
            continue
        through = np.outer(w2[ring, v], w2[v, ring])
        if (far & (w4[np.ix_(ring, ring)] == through)).any():
            out[v] = False
    return out


@dataclass(frozen=True)
class SampleStats:
    connected: bool
    diameter: int = -1
    redundant: int = 0
    redundant2: int = 0


def analyze_matrix(a: np.ndarray, *, second_order: bool = False) -> SampleStats:
    n = a.shape[0]
    ncomp, _ = connected_components(csr_matrix(a), directed=False)
    if ncomp > 1:
        return SampleStats(False)
    d = distances_dense(a)
    red = int(redundant_vector(a).sum()) if n > 2 else n
    red2 = int(second_order_redundant_vector(a, d).sum()) if second_order else 0
    return SampleStats(True, int(d.max()), red, red2)


# ---------------------------------------------------------------------------
# scans


@dataclass(frozen=True)
class GnpRow:
    n: int
    p: float
    samples: int
    connected_samples: int
    p_connected: float
    mean_diameter: float
    mean_redundant_count: float
    mean_2nd_order_redundant_count: float
    p_weak: float
    p_strong: float
    p_diam3_half_redundant: float

    @classmethod
    def header(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    def as_row(self) -> list:
        return list(asdict(self).values())


def _cell(args):
    n, p, seed, gi, start, stop, second_order = args
    acc = np.zeros(7, dtype=np.int64)
    for rep in range(start, stop):
        a = gnp_matrix(n, p, _rng(seed, gi, rep))
        st = analyze_matrix(a, second_order=second_order)
        if not st.connected:
            continue
        acc += (
            1,
            st.diameter,
            st.redundant,
            st.redundant2,
            st.redundant == 0,
            st.redundant == n,
            st.diameter == 3 and 2 * st.redundant >= n,
        )
    return gi, acc


def _row(n, p, samples, acc) -> GnpRow:
    c = int(acc[0])
    mean = (lambda x: float(x) / c) if c else (lambda x: float("nan"))
    return GnpRow(
        n=n,
        p=float(p),
        samples=samples,
        connected_samples=c,
        p_connected=c / samples if samples else float("nan"),
        mean_diameter=mean(acc[1]),
        mean_redundant_count=mean(acc[2]),
        mean_2nd_order_redundant_count=mean(acc[3]),
        p_weak=mean(acc[4]),
        p_strong=mean(acc[5]),
        p_diam3_half_redundant=mean(acc[6]),
    )


def gnp_scan(
    n: int,
    p_grid: Sequence[float],
    samples: int,
    seed: int,
    *,
    jobs: int = 1,
    second_order: bool = False,
    chunk: int = 250,
) -> list[GnpRow]:
    """Monte-Carlo estimates per p.  Replicate ``r`` at grid index ``i`` is
    seeded from (seed, i, r), so results do not depend on ``jobs``.
    Everything except ``p_connected`` is averaged over connected samples."""
    tasks = []
    for gi, p in enumerate(p_grid):
        for start in range(0, samples, chunk):
            tasks.append((n, float(p), seed, gi, start, min(samples, start + chunk), second_order))
    totals = [np.zeros(7, dtype=np.int64) for _ in p_grid]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_cell, tasks))
    else:
        results = [_cell(t) for t in tasks]
    for gi, acc in results:
        totals[gi] += acc
    return [_row(n, p, samples, totals[gi]) for gi, p in enumerate(p_grid)]


def formula_curves(n: int, p_grid: Sequence[float]) -> list[dict]:
    """n * P_red, P_red^n, (1 - P_red)^n and P(diam <= 2) per p."""
    out = []
    for p in p_grid:
        pr = p_red_formula(n, p)
        out.append(
            {
                "n": n,
                "p": float(p),
                "p_red": pr,
                "n_p_red": n * pr,
                "p_strong_est": pr**n,
                "p_weak_est": (1.0 - pr) ** n,
                "p_diam_le2": p_diam_le2(n, p),
            }
        )
    return out


def crossing(f, lo: float, hi: float, level: float = 0.5, tol: float = 1e-10) -> float:
    """Root of ``f(x) = level`` on [lo, hi] (Brent); f must change sign there."""
    from scipy.optimize import brentq

    return brentq(lambda x: f(x) - level, lo, hi, xtol=tol)
