import itertools
import random

import pytest

from redgraph import Graph, canonical_form, canonical_key, canonical_labeling, to_graph6
from redgraph.graph import relabel
from redgraph.named import cycle, hypercube, icosahedron, kneser, petersen

from conftest import random_graph


def brute_key(g: Graph) -> str:
    return min(to_graph6(relabel(g, p)) for p in itertools.permutations(range(g.n)))


def all_labelled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@pytest.mark.parametrize("n, classes", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_classes_of_all_labelled_graphs(n, classes):
    ours, brute = {}, {}
    for g in all_labelled(n):
        ours.setdefault(canonical_key(g), set()).add(g)
        brute.setdefault(brute_key(g), set()).add(g)
    assert len(ours) == classes
    assert sorted(map(frozenset, ours.values()), key=sorted_repr) == sorted(map(frozenset, brute.values()), key=sorted_repr)


def sorted_repr(s):
    return sorted(to_graph6(g) for g in s)


def test_order6_class_count():
    keys = {canonical_key(g) for g in all_labelled(6)}
    assert len(keys) == 156


def test_labeling_is_a_permutation_giving_the_form():
    rng = random.Random(1)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 14), 0.35)
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(g.n))
        assert relabel(g, lab) == canonical_form(g)


def shrikhande() -> Graph:
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    idx = lambda a, b: 4 * (a % 4) + (b % 4)
    edges = {tuple(sorted((idx(a, b), idx(a + da, b + db)))) for a in range(4) for b in range(4) for da, db in conn}
    return Graph.from_edges(16, edges)


def rook44() -> Graph:
    edges = [(u, v) for u in range(16) for v in range(u + 1, 16) if (u // 4 == v // 4) != (u % 4 == v % 4)]
    return Graph.from_edges(16, edges)


def test_cospectral_regular_pair_separated():
    a, b = shrikhande(), rook44()
    assert a.degrees() == b.degrees() == [6] * 16
    assert canonical_key(a) != canonical_key(b)


@pytest.mark.parametrize("g", [petersen(), hypercube(4), icosahedron(), kneser(7, 2), cycle(12), shrikhande()])
def test_invariance_on_symmetric_graphs(g):
    rng = random.Random(g.n)
    key = canonical_key(g)
    for _ in range(5):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_key(relabel(g, perm)) == key


def test_invariance_random_relabel():
    rng = random.Random(9)
    for _ in range(100):
        n = rng.randint(2, 30)
        g = random_graph(rng, n, rng.uniform(0.1, 0.6))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_key(relabel(g, perm)) == canonical_key(g)
