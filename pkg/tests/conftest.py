"""Shared brute-force oracles and generators for the test suite."""

import random
from itertools import combinations

import pytest

from crossint import (Family, KSet, Params, build_extremal_family,
                      is_s_cross_intersecting)


def exhaustive_mwis(side1, side2, edges):
    """Exact MWIS weight of a bipartite graph by complete enumeration.

    Enumerates every subset of the smaller side; the best completion on
    the other side is all vertices with no chosen neighbor.  Independent
    of the flow construction.
    """
    if len(side1) > len(side2):
        side1, side2 = side2, side1
        edges = [(v, u) for u, v in edges]
    labels1 = [v for v, _ in side1]
    weights1 = [w for _, w in side1]
    index1 = {v: i for i, v in enumerate(labels1)}
    total2 = sum(w for _, w in side2)
    blocked_by = []
    for v, w in side2:
        mask = 0
        for a, b in edges:
            if b == v:
                mask |= 1 << index1[a]
        blocked_by.append((mask, w))
    best = 0
    for subset in range(1 << len(labels1)):
        value = sum(w for i, w in enumerate(weights1) if subset >> i & 1)
        value += total2 - sum(w for mask, w in blocked_by if mask & subset)
        best = max(best, value)
    return best


def random_bipartite(rng: random.Random, max_vertices=20, max_weight=100):
    """A random weighted bipartite graph with at most max_vertices vertices."""
    n1 = rng.randint(1, max_vertices - 1)
    n2 = rng.randint(1, max_vertices - n1)
    side1 = tuple((f"u{i}", rng.randint(1, max_weight)) for i in range(n1))
    side2 = tuple((f"v{j}", rng.randint(1, max_weight)) for j in range(n2))
    prob = rng.random()
    edges = tuple((f"u{i}", f"v{j}") for i in range(n1) for j in range(n2)
                  if rng.random() < prob)
    return side1, side2, edges


def small_graph_params(k_max=12, l_max=8):
    """Valid parameter triples with s >= 2 for orbit-graph sweeps."""
    out = []
    for k in range(3, k_max + 1):
        for s in range(2, k):
            for l in range(0, l_max + 1):
                out.append(Params(2 * k - s + 1 + l, k, s))
    return out


def random_cross_pair(rng: random.Random, n, k, s):
    """A guaranteed s-cross-intersecting pair of nonempty families.

    Either both families live inside the extremal family with one side
    pinned to the base set, or every member of both contains a fixed
    common s-subset.
    """
    params = Params(n, k, s)
    if rng.random() < 0.5:
        pool = list(build_extremal_family(params).members)
        f1 = Family(rng.sample(pool, rng.randint(1, min(8, len(pool)))),
                    n=n, k=k)
        f2 = Family([params.base_set()], n=n, k=k)
    else:
        core = rng.sample(range(1, n + 1), s)
        rest = [e for e in range(1, n + 1) if e not in core]
        pool = [KSet.from_elements(core + list(extra), n)
                for extra in combinations(rest, k - s)]
        f1 = Family(rng.sample(pool, rng.randint(1, min(6, len(pool)))),
                    n=n, k=k)
        f2 = Family(rng.sample(pool, rng.randint(1, min(6, len(pool)))),
                    n=n, k=k)
    assert is_s_cross_intersecting(f1, f2, s)[0]
    return f1, f2


@pytest.fixture
def rng():
    return random.Random(20240817)
