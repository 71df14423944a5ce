import random

import pytest

from cubeknot import catalog
from cubeknot.lattice import from_vertices
from cubeknot.moves import apply_m2, enumerate_m2

SQUARE_PTS = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)]
BENT_PTS = [(0, 0, 0), (0, 0, 1), (1, 0, 1), (1, 0, 0), (1, 1, 0), (0, 1, 0)]


@pytest.fixture
def square():
    return from_vertices(SQUARE_PTS)


@pytest.fixture
def bent():
    return from_vertices(BENT_PTS)


@pytest.fixture(params=catalog.names())
def catalog_knot(request):
    return catalog.get(request.param)


def random_move(rng, k):
    """Pick a case uniformly among those available, then a move within it."""
    by_case = {}
    for mv in enumerate_m2(k):
        by_case.setdefault(mv.case, []).append(mv)
    case = rng.choice(sorted(by_case))
    return rng.choice(by_case[case])


def random_orbit(k, steps, seed=0, max_length=None):
    """Knots visited by a random walk of M2 moves starting at ``k``."""
    rng = random.Random(seed)
    out = [k]
    for _ in range(steps):
        while True:
            nk = apply_m2(k, random_move(rng, k))
            if max_length is None or len(nk) <= max_length:
                break
        k = nk
        out.append(k)
    return out
