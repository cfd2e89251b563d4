"""Independent ground truth for equitable list coloring of K_{n,m}.

Three tools:

  * find_equitable_coloring: complete backtracking search for an equitable
    L-coloring of one given k-assignment.
  * uniform_counterexample: the uniform assignment {0..k-1}, which admits
    no equitable L-coloring whenever m > ceil((m+n)/k)*(k-1).
  * decide_choosable: decide equitable k-choosability outright by
    enumerating k-assignments up to symmetry (color relabeling plus
    permutation of same-side vertices) and searching each one.

Only the intersection pattern of lists matters for colorability, so a
color universe of size k*(n+m) is always enough: no assignment can mention
more distinct colors than that.
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator

from .core import (
    EquitableColoring,
    Instance,
    KAssignment,
    PreconditionError,
    check_equitable,
)
from .criteria import uniform_pigeonhole

DEFAULT_BUDGET = 10_000_000


class OracleStatus(Enum):
    CHOOSABLE = "CHOOSABLE"
    NOT_CHOOSABLE = "NOT_CHOOSABLE"


@dataclass(frozen=True)
class OracleVerdict:
    status: OracleStatus
    witness: KAssignment | None
    assignments_examined: int
    colorings_examined: int

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "assignments_examined": self.assignments_examined,
            "colorings_examined": self.colorings_examined,
        }


class BudgetExceededError(RuntimeError):
    def __init__(self, budget: int, assignments_examined: int):
        super().__init__(
            f"canonical enumeration exceeded the budget of {budget} assignments"
        )
        self.budget = budget
        self.assignments_examined = assignments_examined


def _search_raw(n, m, k, u_lists, a_lists, cap):
    """Backtracking search for an equitable coloring; returns
    ((colors_u, colors_a) | None, nodes_tried).

    Vertex order is all of A' first, then A: the A' colors constrain every
    A vertex, so conflicts surface early.  Pruning only discards branches
    that already violate a constraint (class size over cap, or an A color
    already used across the edge on A'), so the search is complete.
    """
    top = 0
    for lst in u_lists:
        top = max(top, lst[-1])
    for lst in a_lists:
        top = max(top, lst[-1])
    counts = [0] * (top + 1)
    on_uprime = [False] * (top + 1)
    colors_u = [0] * n
    colors_a = [0] * m
    nodes = 0

    def rec_u(i):
        nonlocal nodes
        if i == n:
            return rec_a(0)
        for c in u_lists[i]:
            if counts[c] < cap:
                nodes += 1
                counts[c] += 1
                seen_before = on_uprime[c]
                on_uprime[c] = True
                colors_u[i] = c
                if rec_u(i + 1):
                    return True
                counts[c] -= 1
                on_uprime[c] = seen_before
        return False

    def rec_a(j):
        nonlocal nodes
        if j == m:
            return True
        for c in a_lists[j]:
            if not on_uprime[c] and counts[c] < cap:
                nodes += 1
                counts[c] += 1
                colors_a[j] = c
                if rec_a(j + 1):
                    return True
                counts[c] -= 1
        return False

    if rec_u(0):
        return (tuple(colors_u), tuple(colors_a)), nodes
    return None, nodes


def find_equitable_coloring(L: KAssignment) -> EquitableColoring | None:
    """Exhaustive backtracking: a coloring passing check_equitable if one
    exists, else None.  Deterministic (colors tried ascending)."""
    found, _ = _search_raw(
        L.n, L.m, L.k, L.lists_uprime, L.lists_a, L.bound()
    )
    if found is None:
        return None
    coloring = EquitableColoring(L, found[0], found[1])
    assert check_equitable(coloring).ok
    return coloring


def uniform_counterexample(n: int, m: int, k: int) -> KAssignment:
    """The k-assignment giving {0..k-1} to every vertex.

    Requires m > ceil((m+n)/k)*(k-1); the assignment then defeats every
    equitable coloring: side A' occupies at least one of the k colors, the
    m vertices of A must share the at most k-1 remaining colors, and each
    color carries at most ceil((m+n)/k) vertices -- too few.  Outside that
    inequality the uniform assignment IS colorable, so it is refused.
    """
    if not uniform_pigeonhole(n, m, k):
        raise PreconditionError(
            f"uniform assignment is colorable for (n={n}, m={m}, k={k}): "
            f"m <= ceil((m+n)/k)*(k-1)"
        )
    lst = tuple(range(k))
    return KAssignment(Instance(n, m), k, (lst,) * n, (lst,) * m)


# ---------------------------------------------------------------------------
# Canonical enumeration of k-assignments up to symmetry.
#
# Two assignments are equivalent when one maps to the other by relabeling
# colors and permuting vertices within a side; equivalence preserves
# colorability.  We enumerate one side as written order u_1..u_n, v_1..v_m
# and restrict to sequences that are
#   (a) introduction-canonical: scanning lists in order, each new color is
#       the smallest unused integer (so a list is a subset of the colors
#       seen so far plus a consecutive run of fresh ones at its tail), and
#   (b) side-sorted: within each side, lists are lexicographically
#       non-decreasing.
# Every equivalence class has at least one such representative: order each
# side greedily by smallest current canonical form; renaming only ever
# raises the form of a not-yet-placed list, so the greedy sequence comes
# out non-decreasing.  The reduction need not be perfect -- an occasional
# duplicate representative costs time, never correctness.
# ---------------------------------------------------------------------------


def _candidate_lists(n_known, k, room, floor):
    """Sorted k-lists over colors {0..n_known-1} plus up to `room` fresh
    colors, filtered to those >= floor."""
    out = []
    for fresh in range(0, min(k, room) + 1):
        tail = tuple(range(n_known, n_known + fresh))
        for head in combinations(range(n_known), k - fresh):
            cand = head + tail
            if floor is None or cand >= floor:
                out.append(cand)
    out.sort()
    return out


def _complete(prefix, n, m, k, universe) -> Iterator[tuple[tuple, tuple]]:
    """Yield all canonical completions of `prefix` (a tuple of lists for the
    first len(prefix) vertices), in lexicographic order."""
    total = n + m
    pos = len(prefix)
    if pos == total:
        yield prefix[:n], prefix[n:]
        return
    n_known = 1 + max((c for lst in prefix for c in lst), default=-1)
    floor = prefix[pos - 1] if pos not in (0, n) else None
    for cand in _candidate_lists(n_known, k, universe - n_known, floor):
        yield from _complete(prefix + (cand,), n, m, k, universe)


def canonical_assignments(n, m, k, universe_size=None) -> Iterator[KAssignment]:
    """All k-assignments for K_{n,m} up to symmetry, as KAssignment values,
    in deterministic lexicographic order."""
    universe = _universe(n, m, k, universe_size)
    inst = Instance(n, m)
    for u_lists, a_lists in _complete((), n, m, k, universe):
        yield KAssignment(inst, k, u_lists, a_lists)


def _universe(n, m, k, universe_size):
    cap = k * (n + m)
    universe = cap if universe_size is None else min(universe_size, cap)
    if universe < k:
        raise PreconditionError(
            f"color universe {universe} is smaller than the list size {k}"
        )
    return universe


def _slice_prefixes(n, m, k, universe):
    """Split the enumeration below the (forced) first list into independent
    slices, one per choice of the second vertex's list."""
    first = tuple(range(k))
    if n + m == 1:  # unreachable for K_{n,m}, kept for safety
        return [(first,)]
    floor = first if n >= 2 else None
    return [
        (first, cand) for cand in _candidate_lists(k, k, universe - k, floor)
    ]


def _examine_slice(args):
    """Run one slice; returns (witness_lists | None, examined, nodes, capped).

    Stops at the slice's first uncolorable assignment (lexicographically
    least within the slice) or when `cap` assignments have been examined.
    """
    n, m, k, universe, prefix, cap = args
    bound = (n + m + k - 1) // k
    examined = 0
    nodes_total = 0
    for u_lists, a_lists in _complete(prefix, n, m, k, universe):
        if examined >= cap:
            return None, examined, nodes_total, True
        examined += 1
        found, nodes = _search_raw(n, m, k, u_lists, a_lists, bound)
        nodes_total += nodes
        if found is None:
            return (u_lists, a_lists), examined, nodes_total, False
    return None, examined, nodes_total, False


def decide_choosable(
    n: int,
    m: int,
    k: int,
    universe_size: int | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
) -> OracleVerdict:
    """Decide whether K_{n,m} is equitably k-choosable by exhausting the
    canonical assignments.

    NOT_CHOOSABLE comes with a witness: the first uncolorable assignment in
    enumeration order, i.e. the lexicographically least canonical one.  The
    enumeration stops there; `assignments_examined` counts what was
    actually examined up to and including the witness.

    `budget` caps the number of assignments examined; exceeding it raises
    BudgetExceededError.  `jobs` > 1 distributes whole slices of the
    enumeration across processes; slices are consumed in enumeration order,
    so the verdict, witness and statistics are identical for every jobs
    value.
    """
    universe = _universe(n, m, k, universe_size)
    prefixes = _slice_prefixes(n, m, k, universe)
    tasks = [(n, m, k, universe, p, budget) for p in prefixes]

    examined_total = 0
    nodes_total = 0
    witness = None

    def consume(results):
        nonlocal examined_total, nodes_total, witness
        for found, examined, nodes, capped in results:
            examined_total += examined
            nodes_total += nodes
            if capped or examined_total > budget:
                raise BudgetExceededError(budget, examined_total)
            if found is not None:
                witness = KAssignment(Instance(n, m), k, found[0], found[1])
                return True
        return False

    if jobs <= 1:
        consume(map(_examine_slice, tasks))
    else:
        with mp.Pool(processes=jobs) as pool:
            consume(pool.imap(_examine_slice, tasks))

    if witness is not None:
        return OracleVerdict(
            OracleStatus.NOT_CHOOSABLE, witness, examined_total, nodes_total
        )
    return OracleVerdict(OracleStatus.CHOOSABLE, None, examined_total, nodes_total)
