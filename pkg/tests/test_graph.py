import pickle
import random

import numpy as np
import pytest
from scipy.sparse.csgraph import shortest_path

from redgraph import UNREACHABLE, Graph, components, diameter, distance_matrix, is_connected, walk_count_matrix
from redgraph.graph import (
    add_vertex,
    complement,
    delete_vertex,
    disjoint_union,
    girth,
    induced_subgraph,
    metrics,
    relabel,
)
from redgraph.named import complete, cycle, empty, hypercube, path, petersen, star

from conftest import random_graph


def test_unreachable_orders_above_ints():
    assert UNREACHABLE > 10**9
    assert not UNREACHABLE < 3
    assert 3 < UNREACHABLE
    assert max(2, UNREACHABLE) is UNREACHABLE
    assert pickle.loads(pickle.dumps(UNREACHABLE)) is UNREACHABLE


def test_graph_rejects_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b00])  # self-loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert g.num_edges() == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g == path(4)
    assert hash(g) == hash(path(4))
    a = g.adjacency_matrix()
    assert (a == a.T).all() and a.sum() == 6
    assert Graph.from_matrix(a) == g


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.n = 5


@pytest.mark.parametrize(
    "g, diam",
    [(empty(0), 0), (empty(1), 0), (complete(5), 1), (cycle(5), 2), (cycle(8), 4), (petersen(), 2), (hypercube(4), 4), (path(7), 6)],
)
def test_diameter_known(g, diam):
    assert diameter(g) == diam


def test_disconnected_diameter_is_unreachable():
    g = disjoint_union(path(2), path(3))
    assert not is_connected(g)
    assert diameter(g) is UNREACHABLE
    d = distance_matrix(g)
    assert d[0, 3] is UNREACHABLE
    assert d[3, 4] == 1
    assert sorted(bin(c).count("1") for c in components(g)) == [2, 3]


def test_distance_matrix_matches_scipy():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 25)
        g = random_graph(rng, n, rng.uniform(0.05, 0.5))
        ref = shortest_path(g.adjacency_matrix(), unweighted=True, directed=False)
        ours = distance_matrix(g)
        for u in range(n):
            for v in range(n):
                want = UNREACHABLE if np.isinf(ref[u, v]) else int(ref[u, v])
                assert ours[u, v] == want


def test_restrict_matches_subgraph_when_isometric():
    g = cycle(6)
    # deleting one vertex of C6 is not isometric
    keep = [1, 2, 3, 4, 5]
    assert distance_matrix(g).restrict(keep) != distance_matrix(delete_vertex(g, 0))


def test_walk_counts():
    w = walk_count_matrix(cycle(4), 2)
    assert w.tolist() == [[2, 0, 2, 0], [0, 2, 0, 2], [2, 0, 2, 0], [0, 2, 0, 2]]
    # K_n: closed walks of length 3 = (n-1)(n-2)
    w3 = walk_count_matrix(complete(6), 3)
    assert int(w3[0, 0]) == 20
    assert walk_count_matrix(path(3), 0).tolist() == np.eye(3, dtype=int).tolist()


def test_walk_counts_overflow_detected():
    with pytest.raises(OverflowError):
        walk_count_matrix(complete(60), 12)


def test_delete_vertex_compacts_labels():
    g = Graph.from_edges(4, [(0, 3), (1, 2), (2, 3)])
    h = delete_vertex(g, 1)
    assert h.n == 3
    assert sorted(h.edges()) == [(0, 2), (1, 2)]
    assert induced_subgraph(g, [0, 2, 3]) == h


def test_complement_and_relabel():
    assert complement(complete(4)) == empty(4)
    assert complement(cycle(5)).num_edges() == 5
    g = path(3)
    h = relabel(g, [2, 0, 1])
    assert sorted(h.edges()) == [(0, 1), (0, 2)]
    assert add_vertex(path(2), 0b11) == complete(3)


@pytest.mark.parametrize(
    "g, want",
    [(path(5), None), (star(4), None), (complete(4), 3), (cycle(7), 7), (petersen(), 5), (hypercube(3), 4)],
)
def test_girth(g, want):
    assert girth(g) == want


def test_metrics_bundle():
    m = metrics(cycle(5))
    assert (m.connected, m.diameter, m.girth) == (True, 2, 5)
    assert list(m.degree_sequence) == [2] * 5


def test_large_order_rejected():
    with pytest.raises(ValueError):
        Graph(5000, [0] * 5000)
