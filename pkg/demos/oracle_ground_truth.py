"""Settle small instances by exhaustive search and cross-check the criteria.

The oracle enumerates every k-assignment up to symmetry and looks for an
equitable coloring in each; a single uncolorable assignment is a witness
that the graph is not equitably k-choosable.
"""

from eqchoose import (
    Instance,
    KAssignment,
    OracleStatus,
    classify,
    decide_choosable,
    find_equitable_coloring,
    uniform_counterexample,
)

print("=" * 72)
print("Exhaustive decisions vs closed-form criteria")
print("=" * 72)
for (n, m, k) in [(1, 2, 2), (1, 3, 2), (2, 3, 2), (2, 4, 2), (1, 4, 3)]:
    verdict = decide_choosable(n, m, k)
    predicted = classify(n, m, k)
    print(
        f"K_{{{n},{m}}}, k={k}: oracle={verdict.status.value:<14} "
        f"criteria={predicted.status.value:<3} (rule {predicted.rule.value}, "
        f"{verdict.assignments_examined} assignments searched)"
    )
print()

print("=" * 72)
print("A witness in detail: K_{1,3} is not equitably 2-choosable")
print("=" * 72)
witness = decide_choosable(1, 3, 2).witness
print(f"witness lists: u_1 {list(witness.lists_uprime[0])}, "
      f"A-side {[list(l) for l in witness.lists_a]}")
print("searching it for an equitable coloring:", find_equitable_coloring(witness))
print("(the center occupies one of the two colors; three leaves must share")
print(" the other, but no color may be used more than ceil(4/2) = 2 times)")
print()

print("=" * 72)
print("K_{3,3} and the classic two-color trap")
print("=" * 72)
# The inequality 3 <= ceil(6/2)*(2-1) leaves k=2 open for K_{3,3}, but the
# graph is not even 2-choosable: give both sides the lists {0,1}, {0,2},
# {1,2} and no proper coloring exists at all.
theta = ((0, 1), (0, 2), (1, 2))
L = KAssignment(Instance(3, 3), 2, theta, theta)
print("criteria say:", classify(3, 3, 2).status.value, "(outside their reach)")
print("searching the theta-system assignment:", find_equitable_coloring(L))
oracle = decide_choosable(3, 3, 2)
print(f"oracle verdict: {oracle.status.value} "
      f"after {oracle.assignments_examined} canonical assignments")
print()

print("=" * 72)
print("Uniform counterexamples from the pigeonhole inequality")
print("=" * 72)
for (n, m, k) in [(1, 3, 2), (2, 7, 3), (1, 7, 4)]:
    cx = uniform_counterexample(n, m, k)
    result = find_equitable_coloring(cx)
    print(f"K_{{{n},{m}}}, k={k}: uniform lists {list(cx.lists_a[0])} -> {result}")
assert decide_choosable(2, 4, 2).status is OracleStatus.NOT_CHOOSABLE
