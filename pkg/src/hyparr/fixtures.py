"""Named test arrangements and a seeded generator of random central ones."""

import random

from .arrangement import Arrangement


def b2():
    """Two coordinate lines in the plane (Boolean)."""
    return Arrangement([(1, 0), (0, 1)])


def k3():
    """Graphic arrangement of the triangle; one minimal dependency."""
    return Arrangement([(1, 0), (0, 1), (1, 1)])


def rep4():
    """Four lines with the second and third coincident (central form)."""
    return Arrangement([(1, 0), (0, 1), (0, 1), (1, 1)])


def nu4():
    """Four distinct lines in the plane, not unimodular."""
    return Arrangement([(1, 0), (0, 1), (1, 1), (1, -1)])


def k4():
    """Edge vectors of the complete graph on four vertices (last row dropped)."""
    edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    cols = []
    for u, v in edges:
        col = [0, 0, 0, 0]
        col[u - 1] = 1
        col[v - 1] = -1
        cols.append(tuple(col[:3]))
    return Arrangement(cols)


def catalog():
    """All named fixtures keyed by their short names."""
    return {"b2": b2(), "k3": k3(), "rep4": rep4(), "nu4": nu4(), "k4": k4()}


def random_central(seed, max_n=6, max_d=3, entry_bound=3):
    """One random central arrangement with full-rank small integer columns."""
    rng = random.Random(seed)
    while True:
        d = rng.randint(1, max_d)
        n = rng.randint(d, max_n)
        cols = []
        for _ in range(n):
            while True:
                col = tuple(rng.randint(-entry_bound, entry_bound)
                            for _ in range(d))
                if any(col):
                    break
            cols.append(col)
        try:
            return Arrangement(cols)
        except ValueError:
            continue  # rank-deficient draw; try again


def random_central_batch(count, seed=0, **kwargs):
    """Deterministic list of random central arrangements."""
    return [random_central(f"{seed}:{i}", **kwargs) for i in range(count)]
