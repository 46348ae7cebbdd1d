import random

import pytest

from dp2.picard import DivClass


@pytest.fixture
def rng():
    return random.Random(20240211)


def random_class(rng, bound=5):
    return DivClass(tuple(rng.randint(-bound, bound) for _ in range(8)))


@pytest.fixture
def random_classes(rng):
    def make(count, bound=5):
        return [random_class(rng, bound) for _ in range(count)]

    return make


# ---------------------------------------------------------------------------
# shared oracles for the exact-sequence solver
# ---------------------------------------------------------------------------


def oracle_feasible_values(entries, bound=12):
    """Exhaustive rank-vector oracle: all feasible values of each entry.

    Walks every rank vector left to right; a known entry forces the next rank
    outright, an unknown one branches over 0..bound.  Exhaustive over the
    free dimensions, which covers the solver's whole search space up to
    ``bound``.
    """
    n = len(entries)
    values = [set() for _ in range(n)]
    feasible = False

    def walk(i, r_prev, dims):
        nonlocal feasible
        if i == n:
            if r_prev == 0:
                feasible = True
                for k, d in enumerate(dims):
                    values[k].add(d)
            return
        known = entries[i]
        if known is not None:
            r_next = known - r_prev
            if r_next >= 0:
                walk(i + 1, r_next, dims + [known])
            return
        for r_next in range(bound + 1):
            walk(i + 1, r_next, dims + [r_prev + r_next])

    walk(0, 0, [])
    return feasible, values


def knock_out_entries(rng, entries):
    # hide up to two non-adjacent positions, so every rank stays bounded by a
    # known neighbour and the oracle's finite search is complete
    n = len(entries)
    unknown_positions = []
    for pos in rng.sample(range(n), k=min(n, rng.randint(0, 2))):
        if all(abs(pos - q) > 1 for q in unknown_positions):
            unknown_positions.append(pos)
    return tuple(None if i in unknown_positions else entries[i] for i in range(n))


def random_dim_sequence(rng):
    n = rng.randint(2, 8)
    if rng.random() < 0.5:
        # feasible by construction: dims of an actual rank vector
        ranks = [0] + [rng.randint(0, 5) for _ in range(n - 1)] + [0]
        entries = [ranks[i] + ranks[i + 1] for i in range(n)]
    else:
        entries = [rng.randint(0, 10) for _ in range(n)]
    return knock_out_entries(rng, entries)
