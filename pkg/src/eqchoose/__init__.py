"""Exact toolkit for equitable list coloring of complete bipartite graphs.

Everything works in exact integer/rational arithmetic.  The criteria
module answers "is K_{n,m} equitably k-choosable?" by closed-form
inequalities (exactly, when one side has at most two vertices), the
colorer module builds an actual coloring under the matching hypotheses,
and the oracle module settles small instances by exhaustive search so the
other two can be validated against it.
"""

from .core import (
    CheckResult,
    Color,
    EquitableColoring,
    Instance,
    KAssignment,
    PreconditionError,
    StructureError,
    Violation,
    ViolationKind,
    check_equitable,
    equity_bound,
)
from .criteria import (
    CriteriaContradiction,
    IntervalKind,
    KInterval,
    Rule,
    SpectrumReport,
    Status,
    Verdict,
    classify,
    fits_distinct_reserve,
    fits_single_reserve,
    large_k_guarantee,
    no_intervals,
    spectrum,
    uniform_pigeonhole,
    yes_intervals,
)
from .colorer import (
    GreedyRound,
    GreedyTrace,
    PairChoice,
    choose_sparse_pair,
    color_auto,
    color_distinct_reserve,
    color_pair_side,
    greedy_capped_coloring,
)
from .oracle import (
    BudgetExceededError,
    OracleStatus,
    OracleVerdict,
    canonical_assignments,
    decide_choosable,
    find_equitable_coloring,
    uniform_counterexample,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CheckResult",
    "Color",
    "CriteriaContradiction",
    "EquitableColoring",
    "GreedyRound",
    "GreedyTrace",
    "Instance",
    "IntervalKind",
    "KAssignment",
    "KInterval",
    "OracleStatus",
    "OracleVerdict",
    "PairChoice",
    "PreconditionError",
    "Rule",
    "SpectrumReport",
    "Status",
    "StructureError",
    "Verdict",
    "Violation",
    "ViolationKind",
    "canonical_assignments",
    "check_equitable",
    "choose_sparse_pair",
    "classify",
    "color_auto",
    "color_distinct_reserve",
    "color_pair_side",
    "decide_choosable",
    "equity_bound",
    "find_equitable_coloring",
    "fits_distinct_reserve",
    "fits_single_reserve",
    "greedy_capped_coloring",
    "large_k_guarantee",
    "no_intervals",
    "spectrum",
    "uniform_counterexample",
    "uniform_pigeonhole",
    "yes_intervals",
]
