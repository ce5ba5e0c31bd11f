import pytest

from sgfp.randgen import mix, sample_connected_nonregular


def random_graphs(base_seed, count, n_range=(4, 10), p=0.5):
    """Seeded stream of connected non-regular graphs for property tests."""
    lo, hi = n_range
    for i in range(count):
        n = lo + mix(base_seed, 10_000 + i) % (hi - lo + 1)
        yield sample_connected_nonregular(n, p, mix(base_seed, i))


@pytest.fixture
def graph_stream():
    return random_graphs
