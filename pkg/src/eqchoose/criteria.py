"""Arithmetic choosability criteria for K_{n,m}.

Every predicate is exact integer or rational arithmetic; nothing here ever
touches floating point, so boundary cases like m == ceil((m+n)/k)*(k-1)
classify correctly.

Write b = ceil((n+m)/k) for the equity bound.  The criteria:

  * fits_distinct_reserve: m <= b*(k-n).  Reserving n pairwise distinct
    colors for side A' leaves k-n usable class slots of capacity b for the
    m vertices of side A, so K_{n,m} is equitably k-choosable.
  * uniform_pigeonhole: m > b*(k-1).  Under the uniform assignment
    {0..k-1}, side A can use at most k-1 colors, each at most b times, so
    no equitable coloring exists and K_{n,m} is NOT equitably k-choosable.
  * fits_single_reserve: m <= b*(k-1), the complement of the pigeonhole
    obstruction.  For min(n,m) <= 2 this is exact: it decides equitable
    k-choosability in both directions.
  * large_k_guarantee: k >= max(n,m) suffices for every K_{n,m} except the
    balanced odd ones K_{2l+1,2l+1} (where this rule stays silent).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from .core import Instance, StructureError


def _check_args(n: int, m: int, k: int) -> None:
    for name, val in (("n", n), ("m", m), ("k", k)):
        if not isinstance(val, int) or val < 1:
            raise StructureError(f"{name} must be a positive integer, got {val!r}")


def _bound(n: int, m: int, k: int) -> int:
    return (n + m + k - 1) // k


def fits_distinct_reserve(n: int, m: int, k: int) -> bool:
    """m <= ceil((m+n)/k) * (k-n): sufficient for equitable k-choosability.

    For k <= n the right side is <= 0 < m, so this is automatically False.
    """
    _check_args(n, m, k)
    return m <= _bound(n, m, k) * (k - n)


def fits_single_reserve(n: int, m: int, k: int) -> bool:
    """m <= ceil((m+n)/k) * (k-1): the exact threshold when min(n,m) <= 2."""
    _check_args(n, m, k)
    return m <= _bound(n, m, k) * (k - 1)


def uniform_pigeonhole(n: int, m: int, k: int) -> bool:
    """m > ceil((m+n)/k) * (k-1): the uniform k-assignment is uncolorable,
    so K_{n,m} is not equitably k-choosable."""
    _check_args(n, m, k)
    return m > _bound(n, m, k) * (k - 1)


def large_k_guarantee(n: int, m: int, k: int) -> bool:
    """k >= max(n,m) guarantees equitable k-choosability unless n == m is
    odd.  In the excluded case this returns False (no information), never a
    negative verdict."""
    _check_args(n, m, k)
    if n == m and n % 2 == 1:
        return False
    return k >= max(n, m)


class Status(Enum):
    YES = "YES"
    NO = "NO"
    UNKNOWN = "UNKNOWN"


class Rule(Enum):
    """Which criterion decided a verdict."""

    DISTINCT_RESERVE = "DISTINCT_RESERVE"
    UNIFORM_PIGEONHOLE = "UNIFORM_PIGEONHOLE"
    STAR_EXACT = "STAR_EXACT"
    PAIR_EXACT = "PAIR_EXACT"
    LARGE_K = "LARGE_K"
    ONE_COLOR = "ONE_COLOR"
    NONE = "NONE"


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: Rule

    def to_json(self) -> dict:
        return {"status": self.status.value, "rule": self.rule.value}


class CriteriaContradiction(RuntimeError):
    """A YES rule and a NO rule fired for the same (n, m, k).

    This can only happen through an implementation bug; the criteria
    themselves are mutually consistent.
    """


def classify(n: int, m: int, k: int) -> Verdict:
    """Combine all criteria into one verdict.

    K_{n,m} = K_{m,n}, so every orientation-sensitive predicate is tried
    both ways.  Precedence: the k=1 triviality first (a single shared color
    cannot properly color any edge), then the exact characterizations for
    min(n,m) <= 2, then the general sufficient/necessary conditions.  For
    min(n,m) >= 3 some k remain UNKNOWN.
    """
    _check_args(n, m, k)
    lo, hi = min(n, m), max(n, m)

    yes_fired = (
        fits_distinct_reserve(n, m, k)
        or fits_distinct_reserve(m, n, k)
        or large_k_guarantee(n, m, k)
        or (lo <= 2 and fits_single_reserve(lo, hi, k))
    )
    no_fired = (
        k == 1
        or uniform_pigeonhole(n, m, k)
        or uniform_pigeonhole(m, n, k)
        or (lo <= 2 and not fits_single_reserve(lo, hi, k))
    )
    if yes_fired and no_fired:
        raise CriteriaContradiction(
            f"criteria assert both YES and NO for (n={n}, m={m}, k={k})"
        )

    if k == 1:
        return Verdict(Status.NO, Rule.ONE_COLOR)
    if lo == 1:
        status = Status.YES if fits_single_reserve(1, hi, k) else Status.NO
        return Verdict(status, Rule.STAR_EXACT)
    if lo == 2:
        status = Status.YES if fits_single_reserve(2, hi, k) else Status.NO
        return Verdict(status, Rule.PAIR_EXACT)
    if fits_distinct_reserve(n, m, k) or fits_distinct_reserve(m, n, k):
        return Verdict(Status.YES, Rule.DISTINCT_RESERVE)
    if large_k_guarantee(n, m, k):
        return Verdict(Status.YES, Rule.LARGE_K)
    if uniform_pigeonhole(n, m, k) or uniform_pigeonhole(m, n, k):
        return Verdict(Status.NO, Rule.UNIFORM_PIGEONHOLE)
    return Verdict(Status.UNKNOWN, Rule.NONE)


class IntervalKind(Enum):
    YES_INTERVAL = "YES_INTERVAL"
    NO_INTERVAL = "NO_INTERVAL"


@dataclass(frozen=True)
class KInterval:
    """Half-open real interval [lower, upper) of k values with exact
    rational endpoints; `index` is the parameter the interval came from."""

    lower: Fraction
    upper: Fraction
    kind: IntervalKind
    index: int

    def contains(self, k: int) -> bool:
        return self.lower <= k < self.upper

    def integer_members(self) -> list[int]:
        """All integers k >= 1 inside the interval."""
        lo = max(1, _ceil_frac(self.lower))
        hi = _ceil_frac(self.upper)  # exclusive: largest member is < upper
        return [k for k in range(lo, hi) if self.contains(k)]

    def to_json(self) -> dict:
        return {
            "lower": str(self.lower),
            "upper": str(self.upper),
            "kind": self.kind.value,
            "index": self.index,
        }


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _ceil_sqrt_ratio(num: int, den: int) -> int:
    """Smallest non-negative integer t with t*t*den >= num (exact)."""
    t = isqrt(num // den)
    while t * t * den < num:
        t += 1
    return t


def yes_intervals(n: int, m: int) -> list[KInterval]:
    """Intervals of k where fits_distinct_reserve(n, m, k) provably holds.

    For each i = 2 .. ceil(sqrt(1 + m/n)), every k in
    [(m + i*n)/i, (m+n)/(i-1)) satisfies the inequality: the upper end
    forces ceil((m+n)/k) >= i and the lower end gives i*(k-n) >= m.
    Sound but not claimed to cover every qualifying k.
    """
    _check_args(n, m, 1)
    top = _ceil_sqrt_ratio(n + m, n)
    return [
        KInterval(Fraction(m + i * n, i), Fraction(m + n, i - 1), IntervalKind.YES_INTERVAL, i)
        for i in range(2, top + 1)
    ]


def no_intervals(n: int, m: int) -> list[KInterval]:
    """Intervals of k where uniform_pigeonhole(n, m, k) provably holds.

    For each i = n+1 .. n+m, every k in [(m+n)/i, (m+i)/i) satisfies
    m > ceil((m+n)/k)*(k-1): the lower end forces ceil((m+n)/k) <= i and
    the upper end gives i*(k-1) < m.
    """
    _check_args(n, m, 1)
    return [
        KInterval(Fraction(m + n, i), Fraction(m + i, i), IntervalKind.NO_INTERVAL, i)
        for i in range(n + 1, n + m + 1)
    ]


@dataclass(frozen=True)
class SpectrumReport:
    """Per-k verdicts for a fixed K_{n,m}, k = 1..k_max.

    With k_max >= n+m the undisplayed tail is settled: for k >= n+m the
    equity bound is 1 and k-n >= m, so fits_distinct_reserve always holds.
    """

    instance: Instance
    k_max: int
    entries: tuple[tuple[int, Verdict], ...]

    def statuses(self, status: Status) -> set[int]:
        return {k for k, v in self.entries if v.status is status}

    def to_json(self) -> dict:
        return {
            "n": self.instance.n,
            "m": self.instance.m,
            "entries": [
                {"k": k, "status": v.status.value, "rule": v.rule.value}
                for k, v in self.entries
            ],
        }

    def format_table(self) -> str:
        lines = [f"K_{{{self.instance.n},{self.instance.m}}} equitable choosability, k = 1..{self.k_max}"]
        lines.append(f"{'k':>5}  {'status':<8} rule")
        for k, v in self.entries:
            lines.append(f"{k:>5}  {v.status.value:<8} {v.rule.value}")
        return "\n".join(lines)


def spectrum(n: int, m: int, k_max: int) -> SpectrumReport:
    """classify(n, m, k) for every k in 1..k_max."""
    _check_args(n, m, k_max)
    entries = tuple((k, classify(n, m, k)) for k in range(1, k_max + 1))
    return SpectrumReport(Instance(n, m), k_max, entries)
