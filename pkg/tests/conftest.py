from functools import lru_cache

import pytest

from dgorbits.poset import build_graph, enumerate_orbits


@pytest.fixture(scope="session")
def graph_of():
    """Memoized weak-order graphs, shared across the whole run."""
    return lru_cache(maxsize=None)(build_graph)


@pytest.fixture(scope="session")
def orbits_of():
    return lru_cache(maxsize=None)(enumerate_orbits)


def nkl_range(max_n, min_n=2):
    """All parameter triples (n, k, l) with min_n <= n <= max_n."""
    return [
        (n, k, l)
        for n in range(min_n, max_n + 1)
        for k in range(1, n)
        for l in range(1, n)
    ]
