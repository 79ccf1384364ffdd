import random

import pytest

from matroidgame import instances


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def fixed_size_matroid(rng, n, kind=None):
    """Random matroid with exactly n elements."""
    kinds = [kind] if kind else ["uniform", "graphic", "transversal"]
    while True:
        m = instances.random_matroid(rng, n, kinds=kinds)
        if m.n == n:
            return m
