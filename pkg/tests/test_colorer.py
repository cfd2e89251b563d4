"""Constructive colorers, validated against brute force and the checker."""

import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqchoose import (
    Instance,
    KAssignment,
    PreconditionError,
    check_equitable,
    choose_sparse_pair,
    color_auto,
    color_distinct_reserve,
    color_pair_side,
    fits_distinct_reserve,
    fits_single_reserve,
    greedy_capped_coloring,
)
from helpers import disjoint_u_assignment, random_assignment


def valid_capped_colorings(lists, cap):
    """Brute-force oracle: all ways to color an edgeless set from its lists
    with no color used more than cap times."""
    out = []
    for combo in product(*lists):
        usage = {}
        for c in combo:
            usage[c] = usage.get(c, 0) + 1
        if max(usage.values()) <= cap:
            out.append(list(combo))
    return out


class TestGreedyCappedColoring:
    def test_two_colors_four_vertices(self):
        lists = [(0, 1)] * 4
        colors, trace = greedy_capped_coloring(lists, 2, 2)
        assert colors in valid_capped_colorings(lists, 2)
        # forced: both colors used exactly twice, via two popular rounds
        assert [r.color for r in trace.rounds] == [0, 1]
        assert all(len(r.vertices) == 2 for r in trace.rounds)

    def test_forced_single_vertex(self):
        colors, trace = greedy_capped_coloring([(7,)], 1, 1)
        assert colors == [7]
        # one vertex holding 7 already meets the cap-popularity threshold
        assert [(r.color, r.vertices) for r in trace.rounds] == [(7, (0,))]
        assert trace.leftover == ()

    def test_three_distinct_pairs(self):
        lists = [(0, 1), (0, 2), (1, 2)]
        colors, _ = greedy_capped_coloring(lists, 2, 2)
        assert colors in valid_capped_colorings(lists, 2)

    def test_empty_input(self):
        colors, trace = greedy_capped_coloring([], 1, 1)
        assert colors == [] and trace.rounds == () and trace.leftover == ()

    def test_rejects_short_list(self):
        with pytest.raises(PreconditionError):
            greedy_capped_coloring([(0, 1), (5,)], 2, 2)

    def test_rejects_too_many_vertices(self):
        with pytest.raises(PreconditionError):
            greedy_capped_coloring([(0, 1)] * 5, 2, 2)

    def test_deterministic(self):
        lists = [(0, 3), (1, 3), (0, 1), (1, 2)]
        assert greedy_capped_coloring(lists, 2, 2) == greedy_capped_coloring(lists, 2, 2)

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_contract_fuzz(self, data):
        """For any lists meeting the precondition, the output stays inside
        the lists and under the cap, and rounds use pairwise distinct
        colors of exactly `cap` vertices each."""
        min_list = data.draw(st.integers(1, 6))
        cap = data.draw(st.integers(1, 6))
        count = data.draw(st.integers(0, cap * min_list))
        lists = [
            tuple(data.draw(st.sets(st.integers(0, 11), min_size=min_list, max_size=12)))
            for _ in range(count)
        ]
        colors, trace = greedy_capped_coloring(lists, min_list, cap)

        usage = {}
        for i, c in enumerate(colors):
            assert c in lists[i]
            usage[c] = usage.get(c, 0) + 1
        assert all(v <= cap for v in usage.values())
        round_colors = [r.color for r in trace.rounds]
        assert len(set(round_colors)) == len(round_colors)
        assert all(len(r.vertices) == cap for r in trace.rounds)
        assert sum(len(r.vertices) for r in trace.rounds) + len(trace.leftover) == count


class TestColorDistinctReserve:
    def test_star_25_uniform(self):
        L = KAssignment(Instance(1, 25), 6, (tuple(range(6)),), (tuple(range(6)),) * 25)
        out = color_distinct_reserve(L)
        assert check_equitable(out).ok
        assert out.colors_uprime == (0,)
        assert set(out.colors_a) == {1, 2, 3, 4, 5}  # five classes of five

    def test_rainbow_square(self):
        L = KAssignment(Instance(2, 2), 4, (tuple(range(4)),) * 2, (tuple(range(4)),) * 2)
        out = color_distinct_reserve(L)
        assert check_equitable(out).ok
        # bound ceil(4/4) = 1 forces four distinct colors
        assert len(set(out.colors_uprime + out.colors_a)) == 4

    def test_gate_rejects(self):
        L = KAssignment(Instance(3, 9), 4, (tuple(range(4)),) * 3, (tuple(range(4)),) * 9)
        with pytest.raises(PreconditionError):
            color_distinct_reserve(L)  # 9 > ceil(12/4)*(4-3) = 3

    def test_distinct_colors_on_small_side(self):
        rng = random.Random(5)
        n, m, k = 2, 6, 5  # fits: 6 <= ceil(8/5)*(5-2) = 6
        for _ in range(50):
            L = random_assignment(rng, n, m, k, universe=2 * k)
            out = color_distinct_reserve(L)
            assert len(set(out.colors_uprime)) == n
            assert check_equitable(out).ok


class TestChooseSparsePair:
    def test_enumerated_example(self):
        # overlaps: (0,2)->2, (0,3)->0, (1,2)->0, (1,3)->2; the first
        # qualifying pair in lexicographic order is (0,3).
        L = KAssignment(
            Instance(2, 4), 2, ((0, 1), (2, 3)),
            ((0, 2), (0, 2), (1, 3), (1, 3)),
        )
        pick = choose_sparse_pair(L)
        assert (pick.color_u1, pick.color_u2, pick.overlap) == (0, 3, 0)

    def test_a_lists_avoiding_u_colors(self):
        L = KAssignment(
            Instance(2, 3), 2, ((0, 1), (2, 3)),
            ((4, 5), (4, 6), (5, 6)),
        )
        pick = choose_sparse_pair(L)
        assert (pick.color_u1, pick.color_u2, pick.overlap) == (0, 2, 0)

    def test_single_a_vertex(self):
        # m = 1 forces overlap 0: at most one of the four pairs fits in one
        # 2-list, so a zero-overlap pair always exists.
        L = KAssignment(Instance(2, 1), 2, ((0, 1), (2, 3)), ((0, 2),))
        pick = choose_sparse_pair(L)
        assert pick.overlap == 0

    def test_rejects_shared_lists(self):
        L = KAssignment(Instance(2, 1), 2, ((0, 1), (1, 2)), ((0, 2),))
        with pytest.raises(PreconditionError):
            choose_sparse_pair(L)

    def test_bound_and_double_counting_fuzz(self):
        rng = random.Random(424242)
        for _ in range(500):
            m = rng.randint(1, 40)
            k = rng.randint(1, 8)
            L = disjoint_u_assignment(rng, m, k, universe=3 * k)
            pick = choose_sparse_pair(L)
            assert 4 * pick.overlap <= m
            lu1, lu2 = (set(l) for l in L.lists_uprime)
            assert pick.color_u1 in lu1 and pick.color_u2 in lu2
            # independently recompute the overlap
            recount = sum(
                1 for lst in L.lists_a
                if pick.color_u1 in lst and pick.color_u2 in lst
            )
            assert recount == pick.overlap


class TestColorPairSide:
    def test_small_case_k2(self):
        rng = random.Random(11)
        for m in (1, 2, 3):
            for _ in range(100):
                L = random_assignment(rng, 2, m, 2, universe=5)
                out = color_pair_side(L)
                assert check_equitable(out).ok

    def test_shared_path_uniform_139(self):
        L = KAssignment(
            Instance(2, 139), 14, (tuple(range(14)),) * 2, (tuple(range(14)),) * 139
        )
        out = color_pair_side(L)
        assert check_equitable(out).ok
        assert out.colors_uprime == (0, 0)

    def test_disjoint_path_small(self):
        rng = random.Random(99)
        for _ in range(200):
            L = disjoint_u_assignment(rng, 5, 3, universe=6)
            out = color_pair_side(L)
            assert check_equitable(out).ok

    def test_rainbow_path(self):
        L = KAssignment(
            Instance(2, 2), 4, ((0, 1, 2, 3), (4, 5, 6, 7)),
            ((0, 1, 4, 5), (2, 3, 6, 7)),
        )
        out = color_pair_side(L)
        assert check_equitable(out).ok
        assert len(set(out.colors_uprime + out.colors_a)) == 4

    def test_gate_rejects(self):
        L = KAssignment(Instance(2, 4), 2, ((0, 1),) * 2, ((0, 1),) * 4)
        with pytest.raises(PreconditionError):
            color_pair_side(L)  # 4 > ceil(6/2)*1 = 3

    def test_needs_side_of_two(self):
        L = KAssignment(Instance(1, 1), 2, ((0, 1),), ((0, 1),))
        with pytest.raises(PreconditionError):
            color_pair_side(L)

    def test_deterministic(self):
        rng = random.Random(3)
        L = disjoint_u_assignment(rng, 9, 4, universe=8)
        assert color_pair_side(L) == color_pair_side(L)


class TestColorAuto:
    def test_routes(self):
        rng = random.Random(8)
        # k <= 2 goes to the search
        L = random_assignment(rng, 2, 3, 2, universe=4)
        _, route = color_auto(L)
        assert route == "oracle"
        # a side of size 2 under its gate goes to the pair colorer
        L = random_assignment(rng, 5, 2, 4, universe=8)
        coloring, route = color_auto(L)
        assert route == "k2m" and check_equitable(coloring).ok
        # otherwise the distinct-reserve colorer, in either orientation
        L = random_assignment(rng, 9, 1, 4, universe=8)
        assert fits_distinct_reserve(1, 9, 4)
        coloring, route = color_auto(L)
        assert route == "main" and check_equitable(coloring).ok

    def test_oracle_fallback_when_no_gate_holds(self):
        L = KAssignment(
            Instance(3, 3), 3,
            ((0, 1, 2), (0, 1, 3), (0, 2, 3)),
            ((4, 5, 6), (4, 5, 7), (4, 6, 7)),
        )
        assert not fits_distinct_reserve(3, 3, 3)
        coloring, route = color_auto(L)
        assert route == "oracle"
        assert coloring is not None and check_equitable(coloring).ok


def fitting_pairs(max_total, which):
    """(n, m, k) triples under the relevant constructive gate."""
    out = []
    if which == "distinct":
        for n in range(1, max_total):
            for m in range(1, max_total + 1 - n):
                for k in range(1, n + m + 1):
                    if fits_distinct_reserve(n, m, k):
                        out.append((n, m, k))
    else:
        for m in range(1, max_total):
            for k in range(3, m + 2):
                if fits_single_reserve(2, m, k):
                    out.append((2, m, k))
    return out


def test_distinct_reserve_contract_sampled():
    """Sampled version of the full contract (the acceptance suite runs the
    500-per-triple protocol)."""
    rng = random.Random(1)
    for (n, m, k) in fitting_pairs(10, "distinct"):
        for _ in range(25):
            L = random_assignment(rng, n, m, k, universe=2 * k)
            out = color_distinct_reserve(L)
            assert check_equitable(out).ok


def test_pair_side_contract_sampled():
    rng = random.Random(2)
    for (_, m, k) in fitting_pairs(14, "pair"):
        for _ in range(25):
            out = color_pair_side(random_assignment(rng, 2, m, k, universe=2 * k))
            assert check_equitable(out).ok
            out = color_pair_side(disjoint_u_assignment(rng, m, k, universe=2 * k))
            assert check_equitable(out).ok
