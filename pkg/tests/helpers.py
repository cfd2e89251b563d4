"""Shared generators for the test suite.

Random assignments are always drawn through an explicit random.Random so
every test run sees identical inputs.
"""

from __future__ import annotations

import random
from itertools import product

from eqchoose import EquitableColoring, Instance, KAssignment, equity_bound


def random_assignment(rng: random.Random, n, m, k, universe) -> KAssignment:
    colors = range(universe)
    return KAssignment(
        Instance(n, m),
        k,
        tuple(tuple(rng.sample(colors, k)) for _ in range(n)),
        tuple(tuple(rng.sample(colors, k)) for _ in range(m)),
    )


def disjoint_u_assignment(rng: random.Random, m, k, universe) -> KAssignment:
    """K_{2,m} assignment whose two u-lists are disjoint."""
    assert universe >= 2 * k
    colors = list(range(universe))
    u1 = rng.sample(colors, k)
    u2 = rng.sample([c for c in colors if c not in set(u1)], k)
    return KAssignment(
        Instance(2, m),
        k,
        (tuple(u1), tuple(u2)),
        tuple(tuple(rng.sample(colors, k)) for _ in range(m)),
    )


def brute_force_equitable_colorings(L: KAssignment):
    """Every equitable L-coloring, by trying all list combinations.

    Independent of the package's search: properness and the class-size cap
    are recomputed from scratch here.  Only usable for tiny instances.
    """
    bound = equity_bound(L.instance, L.k)
    found = []
    for u_pick in product(*L.lists_uprime):
        for a_pick in product(*L.lists_a):
            if set(u_pick) & set(a_pick):
                continue
            usage = {}
            for c in u_pick + a_pick:
                usage[c] = usage.get(c, 0) + 1
            if max(usage.values()) <= bound:
                found.append(EquitableColoring(L, u_pick, a_pick))
    return found


def has_proper_list_coloring(L: KAssignment) -> bool:
    """Brute force over all list combinations, properness only (no equity)."""
    for u_pick in product(*L.lists_uprime):
        for a_pick in product(*L.lists_a):
            if not (set(u_pick) & set(a_pick)):
                return True
    return False
