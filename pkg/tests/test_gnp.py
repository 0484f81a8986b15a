import math

import numpy as np
import pytest

from redgraph import Graph, distance_matrix, is_connected, kth_redundant_def, redundant_mask
from redgraph import gnp


def sample_graphs(count=40, n=30, seed=0):
    rng = np.random.default_rng(seed)
    for i in range(count):
        p = rng.uniform(0.05, 0.3)
        yield gnp.gnp_matrix(n, p, rng)


def test_matrix_is_symmetric_simple():
    a = gnp.gnp_matrix(50, 0.3, np.random.default_rng(1))
    assert a.dtype == bool
    assert (a == a.T).all() and not a.diagonal().any()
    with pytest.raises(ValueError):
        gnp.gnp_matrix(5, 1.5, np.random.default_rng(0))


def test_dense_redundancy_matches_bitsets():
    for a in sample_graphs():
        g = Graph.from_matrix(a)
        red = gnp.redundant_vector(a)
        mask = redundant_mask(g)
        assert [bool(mask >> v & 1) for v in range(g.n)] == red.tolist()


def test_dense_distances_match():
    for a in sample_graphs(seed=3):
        g = Graph.from_matrix(a)
        d = gnp.distances_dense(a)
        ref = distance_matrix(g)
        for u in range(g.n):
            for v in range(g.n):
                r = ref[u, v]
                assert d[u, v] == (-1 if not isinstance(r, int) else r)


def test_second_order_matches_definition():
    checked = 0
    for a in sample_graphs(count=30, n=22, seed=5):
        g = Graph.from_matrix(a)
        if not is_connected(g):
            continue
        d = gnp.distances_dense(a)
        vec = gnp.second_order_redundant_vector(a, d)
        assert vec.tolist() == [kth_redundant_def(g, v, 2) for v in range(g.n)]
        checked += 1
    assert checked >= 5


def test_binom_pmf():
    assert sum(gnp.binom_pmf(20, k, 0.3) for k in range(21)) == pytest.approx(1.0)
    assert gnp.binom_pmf(10, 3, 0.5) == pytest.approx(120 / 1024)
    assert gnp.binom_pmf(5, 0, 0.0) == 1.0
    with pytest.raises(ValueError):
        gnp.binom_pmf(5, 6, 0.5)


def test_p_red_limits():
    # p -> 0: isolated vertices are redundant; p -> 1: complete graph
    assert gnp.p_red_formula(100, 1e-9) == pytest.approx(1.0)
    assert gnp.p_red_formula(100, 0.999) == pytest.approx(1.0)
    mid = gnp.p_red_formula(100, 0.1)
    assert 0 < mid < 0.05


def test_p_red_small_n_by_hand():
    # n = 3: vertex of degree 2 has one pair, adjacent with prob p, no other vertex
    p = 0.4
    want = (1 - p) ** 2 + 2 * p * (1 - p) + p * p * p
    assert gnp.p_red_formula(3, p) == pytest.approx(want)


def test_p_diam_le2():
    assert gnp.p_diam_le2(10, 1.0) == 1.0
    assert gnp.p_diam_le2(10, 0.0) == 0.0
    # n = 2: just the edge
    assert gnp.p_diam_le2(2, 0.3) == pytest.approx(0.3)


def test_thresholds_n1000():
    th = gnp.thresholds(1000)
    assert th.L == pytest.approx(math.log(1000) / 1000)
    assert th.L == pytest.approx(0.006908, abs=1e-6)
    assert th.weak_p == pytest.approx(0.008635, abs=1e-6)
    assert th.weak_end_p == pytest.approx(0.083113, abs=1e-6)
    assert th.diam2_p == pytest.approx(0.117539, abs=1e-6)
    assert th.strong_p == pytest.approx(0.131413, abs=1e-6)
    assert th.ordered() == sorted(th.ordered())


def test_scan_independent_of_jobs_and_chunks():
    grid = [0.08, 0.2]
    a = gnp.gnp_scan(40, grid, 30, seed=4, jobs=1, chunk=7)
    b = gnp.gnp_scan(40, grid, 30, seed=4, jobs=2, chunk=30)
    assert a == b
    c = gnp.gnp_scan(40, grid, 30, seed=5)
    assert a != c


def test_scan_row_fields():
    (row,) = gnp.gnp_scan(30, [0.5], 20, seed=1, second_order=True)
    assert row.samples == 20 and row.connected_samples == 20
    assert row.p_connected == 1.0
    assert row.mean_diameter == pytest.approx(2.0, abs=0.2)
    assert row.p_strong > 0.5
    assert gnp.GnpRow.header()[:3] == ["n", "p", "samples"]


def test_disconnected_cells_give_nan():
    (row,) = gnp.gnp_scan(30, [0.0], 5, seed=1)
    assert row.connected_samples == 0 and math.isnan(row.mean_diameter)


def test_formula_curves_and_crossing():
    rows = gnp.formula_curves(100, [0.1, 0.5])
    assert set(rows[0]) == {"n", "p", "p_red", "n_p_red", "p_strong_est", "p_weak_est", "p_diam_le2"}
    x = gnp.crossing(lambda p: gnp.p_diam_le2(1000, p), 0.05, 0.5)
    assert gnp.p_diam_le2(1000, x) == pytest.approx(0.5, abs=1e-6)
