import os
import random

import pytest

from redgraph import Graph, generate_all, is_connected


def pytest_addoption(parser):
    parser.addoption("--long-run", action="store_true", default=False, help="run n=9 enumeration checks")


def long_run_enabled(config) -> bool:
    return config.getoption("--long-run") or os.environ.get("REDGRAPH_LONG") == "1"


def pytest_collection_modifyitems(config, items):
    if long_run_enabled(config):
        return
    skip = pytest.mark.skip(reason="long run: pass --long-run or set REDGRAPH_LONG=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def corpus():
    """All graphs up to isomorphism, keyed by order, n <= 7."""
    return {n: list(generate_all(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def corpus_flat(corpus):
    return [g for n in sorted(corpus) for g in corpus[n]]


@pytest.fixture(scope="session")
def connected_corpus(corpus_flat):
    return [g for g in corpus_flat if is_connected(g)]


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)
