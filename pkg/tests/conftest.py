import random

import pytest

from sphtor import arcs_in_window

ALL_WEIGHTS = (-3, -2, -1, 0, 2, 3, 4)


@pytest.fixture(scope="session")
def window_arcs():
    cache = {}

    def get(w, radius):
        key = (w, radius)
        if key not in cache:
            cache[key] = tuple(arcs_in_window(w, -radius, radius))
        return cache[key]

    return get


def random_arc_sets(w, radius, count, max_size, seed_base):
    """Deterministic stream of small arc samples inside a window."""
    pool = list(arcs_in_window(w, -radius, radius))
    for seed in range(count):
        rng = random.Random(seed_base + seed)
        yield rng.sample(pool, rng.randint(0, max_size))
