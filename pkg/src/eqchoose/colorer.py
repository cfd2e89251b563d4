"""Constructive equitable L-coloring algorithms for K_{n,m}.

Each colorer runs under the precondition of the criterion it realizes and
produces a coloring that passes check_equitable:

  * greedy_capped_coloring colors an edgeless vertex set from lists, using
    no color more than `cap` times.  It is the workhorse the other two
    finish with.
  * color_distinct_reserve handles any K_{n,m} with
    m <= ceil((m+n)/k)*(k-n).
  * color_pair_side handles K_{2,m} whenever m <= ceil((m+2)/k)*(k-1),
    i.e. on the graph's entire equitably-k-choosable range.

All tie-breaks are lowest color id, then lowest vertex index, so identical
inputs give identical outputs and traces.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import (
    Color,
    EquitableColoring,
    KAssignment,
    PreconditionError,
    check_equitable,
    equity_bound,
)
from .criteria import fits_distinct_reserve, fits_single_reserve
from .oracle import find_equitable_coloring


@dataclass(frozen=True)
class GreedyRound:
    """One round of capped coloring: `vertices` all received `color`."""

    color: Color
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class GreedyTrace:
    rounds: tuple[GreedyRound, ...]
    leftover: tuple[int, ...]


def greedy_capped_coloring(
    lists, min_list_size: int, cap: int
) -> tuple[list[Color], GreedyTrace]:
    """Color an edgeless vertex set from its lists, no color used more than
    `cap` times.

    Requires every list to hold at least `min_list_size` colors and at most
    cap * min_list_size vertices.  While some color sits in at least `cap`
    of the uncolored lists, give it to exactly `cap` of its holders and
    withdraw it from everyone else; each such round shrinks the remaining
    lists by at most one.  The loop runs at most min_list_size - 1 times
    before everyone is colored, so when it stops every uncolored vertex
    still has a nonempty list, and every remaining color is in fewer than
    `cap` lists -- any greedy completion respects the cap.
    """
    lists = [tuple(sorted(set(l))) for l in lists]
    if min_list_size < 1 or cap < 1:
        raise PreconditionError(
            f"min_list_size and cap must be >= 1, got {min_list_size}, {cap}"
        )
    short = [i for i, l in enumerate(lists) if len(l) < min_list_size]
    if short:
        raise PreconditionError(
            f"lists at {short} are shorter than min_list_size={min_list_size}"
        )
    if len(lists) > cap * min_list_size:
        raise PreconditionError(
            f"{len(lists)} vertices exceed cap*min_list_size = {cap * min_list_size}"
        )

    residual = [set(l) for l in lists]
    colors: list[Color | None] = [None] * len(lists)
    uncolored = set(range(len(lists)))
    rounds: list[GreedyRound] = []

    while True:
        tally = Counter()
        for i in uncolored:
            tally.update(residual[i])
        popular = [c for c, cnt in tally.items() if cnt >= cap]
        if not popular:
            break
        c = min(popular)
        holders = sorted(i for i in uncolored if c in residual[i])[:cap]
        for i in holders:
            colors[i] = c
        uncolored.difference_update(holders)
        for i in uncolored:
            residual[i].discard(c)
        rounds.append(GreedyRound(c, tuple(holders)))

    leftover = sorted(uncolored)
    for i in leftover:
        assert residual[i], "residual list exhausted; precondition arithmetic is broken"
        colors[i] = min(residual[i])
    return colors, GreedyTrace(tuple(rounds), tuple(leftover))


def color_distinct_reserve(
    L: KAssignment, trace: list[GreedyRound] | None = None
) -> EquitableColoring:
    """Equitably color K_{n,m} when m <= ceil((m+n)/k)*(k-n).

    Side A' takes pairwise distinct colors (lowest available in each list;
    the inequality forces k > n, so a choice always remains).  Those n
    colors are withdrawn from side A's lists, leaving at least k-n colors
    each, and greedy_capped_coloring finishes side A under the equity
    bound.
    """
    n, m, k = L.n, L.m, L.k
    if not fits_distinct_reserve(n, m, k):
        raise PreconditionError(
            f"m <= ceil((m+n)/k)*(k-n) fails for (n={n}, m={m}, k={k})"
        )
    reserved: list[Color] = []
    for lst in L.lists_uprime:
        pick = next((c for c in lst if c not in reserved), None)
        assert pick is not None, "k > n guarantees an unused color per list"
        reserved.append(pick)

    reserved_set = set(reserved)
    residual = [[c for c in lst if c not in reserved_set] for lst in L.lists_a]
    cap = equity_bound(L.instance, k)
    a_colors, greedy = greedy_capped_coloring(residual, k - n, cap)
    if trace is not None:
        trace.extend(greedy.rounds)

    out = EquitableColoring(L, tuple(reserved), tuple(a_colors))
    assert check_equitable(out).ok, "constructed coloring failed its own check"
    return out


@dataclass(frozen=True)
class PairChoice:
    """Colors for u_1 and u_2 plus the number of A-lists containing both."""

    color_u1: Color
    color_u2: Color
    overlap: int


def choose_sparse_pair(L: KAssignment) -> PairChoice:
    """For disjoint L(u_1) and L(u_2), pick one color from each so that at
    most m/4 of the A-lists contain both.

    Counting forces such a pair to exist: an A-list holding a colors of
    L(u_1) and b of L(u_2) contains a*b <= ceil(k/2)*floor(k/2) of the k^2
    pairs, so the overlaps summed over all pairs are at most k^2*m/4 and
    the smallest one is at most m/4.  All k^2 pairs are examined; the
    lexicographically least qualifying pair is returned.
    """
    if L.n != 2:
        raise PreconditionError(f"pair choice needs n = 2, got n = {L.n}")
    lu1, lu2 = L.lists_uprime
    if set(lu1) & set(lu2):
        raise PreconditionError(
            "u-lists share a color; use the shared-color path instead"
        )
    m = L.m
    a_sets = [set(l) for l in L.lists_a]

    best: PairChoice | None = None
    overlap_sum = 0
    for c1 in lu1:
        for c2 in lu2:
            beta = sum(1 for s in a_sets if c1 in s and c2 in s)
            overlap_sum += beta
            if best is None and 4 * beta <= m:
                best = PairChoice(c1, c2, beta)

    gamma_sum = sum(len(set(lu1) & s) * len(set(lu2) & s) for s in a_sets)
    assert overlap_sum == gamma_sum, "pair-overlap double counting is off"
    assert best is not None, "a pair with 4*overlap <= m must exist"
    return best


def color_pair_side(
    L: KAssignment, trace: list[GreedyRound] | None = None
) -> EquitableColoring:
    """Equitably color K_{2,m} whenever m <= ceil((m+2)/k)*(k-1).

    Dispatch: with k >= m+2 every color class has size 1 and a greedy
    all-distinct coloring works; with k <= 2 only finitely many m pass the
    gate and exhaustive search settles them.  Otherwise, if the two u-lists
    share a color, both u's take it and greedy_capped_coloring finishes
    side A on lists of length >= k-1.  If they are disjoint, the pair from
    choose_sparse_pair colors the u's, and side A is colored by the
    deficient-set rounds in _color_disjoint below.
    """
    if L.n != 2:
        raise PreconditionError(f"this colorer needs n = 2, got n = {L.n}")
    m, k = L.m, L.k
    if not fits_single_reserve(2, m, k):
        raise PreconditionError(
            f"m <= ceil((m+2)/k)*(k-1) fails for (n=2, m={m}, k={k})"
        )

    if k >= m + 2:
        out = _color_all_distinct(L)
    elif k <= 2:
        found = find_equitable_coloring(L)
        assert found is not None, "small cases under the gate are always colorable"
        out = found
    else:
        lu1, lu2 = L.lists_uprime
        shared = set(lu1) & set(lu2)
        cap = equity_bound(L.instance, k)
        if shared:
            z = min(shared)
            residual = [[c for c in lst if c != z] for lst in L.lists_a]
            a_colors, greedy = greedy_capped_coloring(residual, k - 1, cap)
            if trace is not None:
                trace.extend(greedy.rounds)
            out = EquitableColoring(L, (z, z), tuple(a_colors))
        else:
            out = _color_disjoint(L, cap, trace)

    assert check_equitable(out).ok, "constructed coloring failed its own check"
    return out


def _color_all_distinct(L: KAssignment) -> EquitableColoring:
    """Greedy system of distinct representatives across ALL vertices; valid
    whenever k >= n+m (each list is longer than the number of vertices
    colored before it)."""
    used: set[Color] = set()
    picked: list[Color] = []
    for lst in list(L.lists_uprime) + list(L.lists_a):
        pick = next((c for c in lst if c not in used), None)
        assert pick is not None, "list size >= vertex count guarantees a choice"
        used.add(pick)
        picked.append(pick)
    return EquitableColoring(L, tuple(picked[: L.n]), tuple(picked[L.n :]))


def _color_disjoint(
    L: KAssignment, cap: int, trace: list[GreedyRound] | None
) -> EquitableColoring:
    """The disjoint-u-lists process for K_{2,m}, 3 <= k < m+2.

    After stripping the chosen pair, the vertices whose lists lost two
    colors form the deficient set; it holds at most m/4 vertices.  Rounds:
    while some color lies in at least `cap` of the deficient lists, color
    exactly `cap` such holders with it and withdraw it everywhere.  Each
    round keeps the deficient set shrinking (it is recomputed from residual
    list lengths, and must stay nested).  Because the deficient set is
    small, the rounds stop after at most k-3 of them.  If afterwards some
    color still sits in `cap` of ALL the remaining lists, one patch round
    colors every deficient holder of it plus enough outside holders to
    reach exactly `cap` uses; stripped lists then hold enough colors for
    greedy_capped_coloring to finish.  With no such color, every remaining
    color fits under the cap by counting alone and a plain greedy choice
    completes the coloring.
    """
    m, k = L.m, L.k
    pair = choose_sparse_pair(L)
    z1, z2 = pair.color_u1, pair.color_u2

    residual = [set(lst) - {z1, z2} for lst in L.lists_a]
    colors: list[Color | None] = [None] * m
    uncolored = set(range(m))
    rounds_done = 0
    prev_deficient: set[int] | None = None

    def emit(color, vertices):
        if trace is not None:
            trace.append(GreedyRound(color, tuple(vertices)))

    while True:
        floor_len = k - 2 - rounds_done
        deficient = sorted(i for i in uncolored if len(residual[i]) == floor_len)
        assert prev_deficient is None or set(deficient) <= prev_deficient, (
            "deficient sets must be nested"
        )
        tally = Counter()
        for i in deficient:
            tally.update(residual[i])
        popular = [c for c, cnt in tally.items() if cnt >= cap]
        if not popular:
            break
        c = min(popular)
        holders = [i for i in deficient if c in residual[i]][:cap]
        for i in holders:
            colors[i] = c
        uncolored.difference_update(holders)
        for i in uncolored:
            residual[i].discard(c)
        emit(c, holders)
        prev_deficient = set(deficient) - set(holders)
        rounds_done += 1
        assert rounds_done <= k - 3, "deficient rounds overran their bound"

    tally = Counter()
    for i in uncolored:
        tally.update(residual[i])
    popular = [c for c, cnt in tally.items() if cnt >= cap]

    if popular:
        c = min(popular)
        floor_len = k - 2 - rounds_done
        in_deficient = [
            i for i in sorted(uncolored)
            if len(residual[i]) == floor_len and c in residual[i]
        ]
        assert len(in_deficient) < cap, "the rounds above would have taken this color"
        outside = [
            i for i in sorted(uncolored)
            if c in residual[i] and i not in set(in_deficient)
        ]
        need = cap - len(in_deficient)
        assert len(outside) >= need, "a popular color cannot run out of holders"
        chosen = in_deficient + outside[:need]
        for i in chosen:
            colors[i] = c
        uncolored.difference_update(chosen)
        for i in uncolored:
            residual[i].discard(c)
        emit(c, chosen)
        rounds_done += 1

        remaining = sorted(uncolored)
        rest_lists = [sorted(residual[i]) for i in remaining]
        rest_colors, greedy = greedy_capped_coloring(
            rest_lists, k - 1 - rounds_done, cap
        )
        for i, c in zip(remaining, rest_colors):
            colors[i] = c
        if trace is not None:
            for r in greedy.rounds:
                trace.append(GreedyRound(r.color, tuple(remaining[i] for i in r.vertices)))
    else:
        # Every color lies in fewer than `cap` of the remaining lists, so a
        # plain greedy choice cannot overfill any class.
        for i in sorted(uncolored):
            assert residual[i], "remaining list exhausted; the round bound is broken"
            colors[i] = min(residual[i])

    return EquitableColoring(L, (z1, z2), tuple(colors))


def color_auto(
    L: KAssignment, trace: list[GreedyRound] | None = None
) -> tuple[EquitableColoring | None, str]:
    """Pick a coloring route for one assignment: exhaustive search when
    k <= 2 or no constructive precondition holds, the K_{2,m} colorer when
    either side has size 2 and its gate passes, otherwise the general
    colorer in whichever orientation satisfies its inequality.  Returns the
    coloring (None only on the search route, when none exists) and the name
    of the route taken."""
    n, m, k = L.n, L.m, L.k
    if k > 2:
        if n == 2 and fits_single_reserve(2, m, k):
            return color_pair_side(L, trace), "k2m"
        if m == 2 and fits_single_reserve(2, n, k):
            return color_pair_side(L.transposed(), trace).transposed(), "k2m"
        if fits_distinct_reserve(n, m, k):
            return color_distinct_reserve(L, trace), "main"
        if fits_distinct_reserve(m, n, k):
            return color_distinct_reserve(L.transposed(), trace).transposed(), "main"
    return find_equitable_coloring(L), "oracle"
