import random

import pytest
from hypothesis import HealthCheck, settings

from critset.graphs import Graph, all_graphs, random_graph

settings.register_profile(
    "suite", deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


def adj_of(g: Graph) -> list[int]:
    return list(g.adj)


def small_corpus(max_n: int = 5):
    """Every labeled graph with n <= max_n; the workhorse oracle corpus."""
    for n in range(max_n + 1):
        yield from all_graphs(n)


def random_sample(count: int, n_lo: int, n_hi: int, seed: int = 99):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(n_lo, n_hi + 1)
        yield random_graph(n, rng.choice([0.15, 0.3, 0.5]),
                           rng.getrandbits(32))


@pytest.fixture(scope="session")
def graphs_n5() -> list[Graph]:
    return list(small_corpus(5))
