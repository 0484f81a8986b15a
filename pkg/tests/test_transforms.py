import itertools
import random

import pytest

from redgraph import Graph, GraphClass, classify_mask, redundant_mask, to_graph6
from redgraph.graph import distance_matrix, induced_subgraph, is_connected
from redgraph.named import complete, cycle, path, star
from redgraph.redundancy import surrounded_mask
from redgraph.transforms import (
    PARTIAL_SHORT_MAX_NBHD,
    MergeError,
    add_dominating_twins,
    merge,
    partial_short,
    partial_short_edges,
    partial_short_targets,
    short,
    spider_weaken,
    split_twin,
    strengthen_by_twin_split,
    tensor_product,
)


def test_short_examples():
    assert to_graph6(short(cycle(5), 0)) == "Cl"  # C4
    assert short(star(4), 0) == complete(4)
    assert short(path(3), 1) == complete(2)
    with pytest.raises(IndexError):
        short(path(3), 5)


def test_short_keeps_strong(corpus_flat):
    n_checked = 0
    for g in corpus_flat:
        if g.n < 2 or classify_mask(g) is not GraphClass.STRONG:
            continue
        for v in range(g.n):
            assert classify_mask(short(g, v)) is GraphClass.STRONG
            n_checked += 1
    assert n_checked > 1000


def brute_partial_short(g: Graph, v: int) -> list[tuple[int, int]]:
    """Smallest, then lexicographically least, edge set meeting the targets."""
    targets = partial_short_targets(g, v)
    nb = sorted(targets)
    cands = [(x, y) for x, y in itertools.combinations(nb, 2) if not g.has_edge(x, y)]
    for size in range(len(cands) + 1):
        for chosen in itertools.combinations(cands, size):
            deg = {x: g.degree(x) - 1 for x in nb}
            for x, y in chosen:
                deg[x] += 1
                deg[y] += 1
            if all(deg[x] >= targets[x] for x in nb):
                return list(chosen)
    raise AssertionError


def test_partial_short_minimal(corpus):
    for n in range(2, 7):
        for g in corpus[n]:
            for v in range(n):
                assert partial_short_edges(g, v) == brute_partial_short(g, v)


def test_partial_short_examples():
    # star: leaves would become isolated, each needs one new edge
    edges = partial_short_edges(star(4), 0)
    assert len(edges) == 2
    h = partial_short(star(4), 0)
    assert min(h.degrees()) >= 1
    # C5: both neighbours drop to degree 1 and need one new edge
    assert partial_short_edges(cycle(5), 0) == [(1, 4)]
    # K4: nothing is missing
    assert partial_short_edges(complete(4), 0) == []


def test_partial_short_size_limit():
    with pytest.raises(ValueError):
        partial_short(star(PARTIAL_SHORT_MAX_NBHD + 1), 0)


def test_tensor_labels_and_size():
    h = tensor_product(complete(2), path(3))
    # (u, v) -> 3u + v; edges (0,a)-(1,b) with a ~ b in P3
    assert sorted(h.edges()) == [(0, 4), (1, 3), (1, 5), (2, 4)]
    assert tensor_product(complete(3), complete(3)).degrees() == [4] * 9
    with pytest.raises(ValueError):
        tensor_product(complete(70), complete(70))


def test_tensor_of_c5_is_weak():
    assert classify_mask(tensor_product(cycle(5), cycle(5))) is GraphClass.WEAK


def test_merge_identifies_common_subgraph():
    a = path(3)  # 0-1-2
    b = path(3)
    h = merge(a, b, {1: 0, 2: 1})
    assert h.n == 4
    assert sorted(h.edges()) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(MergeError, match=r"\(0, 2\)"):
        merge(a, b, {0: 0, 2: 1})
    with pytest.raises(MergeError):
        merge(a, b, {0: 0, 1: 0})


def test_split_twins():
    g = split_twin(path(3), 0, "weak")
    assert g.neighbors(3) == [1]
    g = split_twin(path(3), 0, "strong")
    assert g.neighbors(3) == [0, 1]
    with pytest.raises(ValueError):
        split_twin(path(3), 0, "odd")


def test_dominating_twins_on_c5():
    g = add_dominating_twins(cycle(5), 2)
    assert g.n == 7
    assert classify_mask(g) is GraphClass.STRONG
    assert induced_subgraph(g, range(5)) == cycle(5)
    with pytest.raises(ValueError):
        add_dominating_twins(cycle(5), 1)


def test_dominating_twins_always_strong(corpus_flat):
    for g in corpus_flat[1::7]:
        for k in (2, 3):
            assert classify_mask(add_dominating_twins(g, k)) is GraphClass.STRONG
    assert add_dominating_twins(Graph(1, [0]), 2) == Graph.from_edges(3, [(0, 1), (0, 2)])


def test_strengthen_always_strong_and_isometric(corpus_flat):
    for g in corpus_flat:
        h = strengthen_by_twin_split(g)
        assert classify_mask(h) is GraphClass.STRONG
        assert h.n == g.n + g.n - bin(redundant_mask(g)).count("1")
        assert induced_subgraph(h, range(g.n)) == g
        assert distance_matrix(h).restrict(list(range(g.n))) == distance_matrix(g)


def test_spider_makes_weak(corpus_flat):
    for g in corpus_flat:
        if not is_connected(g) or g.n < 2:
            continue
        k = bin(redundant_mask(g)).count("1")
        h = spider_weaken(g)
        assert redundant_mask(h) == 0
        assert h.n <= g.n + k + 1
        assert induced_subgraph(h, range(g.n)) == g


def test_spider_rejects_isolated_vertex():
    with pytest.raises(ValueError):
        spider_weaken(Graph(3, [0b10, 0b01, 0]))


def test_tensor_theorems_sampled(corpus):
    rng = random.Random(3)
    pool = [g for n in range(2, 7) for g in corpus[n]]
    weak = [g for g in pool if classify_mask(g) is GraphClass.WEAK]
    strong = [g for g in pool if classify_mask(g) is GraphClass.STRONG and min(g.degrees()) >= 2]
    unsur = [g for g in pool if surrounded_mask(g) == 0]
    for _ in range(40):
        assert classify_mask(tensor_product(rng.choice(weak), rng.choice(weak))) is GraphClass.WEAK
        assert classify_mask(tensor_product(rng.choice(strong), rng.choice(strong))) is GraphClass.STRONG
        assert surrounded_mask(tensor_product(rng.choice(unsur), rng.choice(unsur))) == 0
