"""Core types for equitable list coloring of complete bipartite graphs.

K_{n,m} has partite sets A' = {u_1..u_n} and A = {v_1..v_m}; every edge
joins A' to A and there are no edges within a side.  A k-assignment gives
each vertex a list of exactly k colors.  An equitable L-coloring is a
proper coloring that picks each vertex's color from its own list and uses
no color on more than ceil((n+m)/k) vertices.

All arithmetic here is exact integer arithmetic; colors are plain
non-negative ints whose ordering is used only for deterministic
tie-breaking.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

Color = int


class StructureError(ValueError):
    """Malformed input (shape/schema mismatch), distinct from a failed check."""


class PreconditionError(ValueError):
    """An operation was invoked outside its stated precondition."""


@dataclass(frozen=True)
class Instance:
    """The pair (n, m) naming K_{n,m}: |A'| = n, |A| = m."""

    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise StructureError("partite set sizes must be integers")
        if self.n < 1 or self.m < 1:
            raise StructureError(f"partite set sizes must be >= 1, got ({self.n}, {self.m})")

    @property
    def total(self) -> int:
        return self.n + self.m

    def transposed(self) -> Instance:
        return Instance(self.m, self.n)

    def u_name(self, i: int) -> str:
        return f"u{i + 1}"

    def a_name(self, j: int) -> str:
        return f"v{j + 1}"


def equity_bound(inst: Instance, k: int) -> int:
    """Largest allowed color-class size: ceil((n+m)/k), computed as exact
    integer arithmetic ((n + m + k - 1) // k)."""
    if not isinstance(k, int) or k < 1:
        raise StructureError(f"k must be a positive integer, got {k!r}")
    return (inst.n + inst.m + k - 1) // k


def _normalize_list(colors, k: int, where: str) -> tuple[Color, ...]:
    out = tuple(sorted(set(colors)))
    if any(not isinstance(c, int) or c < 0 for c in out):
        raise StructureError(f"{where}: colors must be non-negative integers")
    if len(out) != k:
        raise StructureError(
            f"{where}: expected {k} distinct colors, got {len(out)} ({list(out)})"
        )
    return out


@dataclass(frozen=True)
class KAssignment:
    """A k-assignment for K_{n,m}: one list of exactly k distinct colors per
    vertex.  Lists are stored deduplicated and sorted ascending so equal
    assignments compare and hash equal."""

    instance: Instance
    k: int
    lists_uprime: tuple[tuple[Color, ...], ...]
    lists_a: tuple[tuple[Color, ...], ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise StructureError(f"k must be a positive integer, got {self.k!r}")
        ups = tuple(self.lists_uprime)
        avs = tuple(self.lists_a)
        if len(ups) != self.instance.n:
            raise StructureError(
                f"expected {self.instance.n} lists on side A', got {len(ups)}"
            )
        if len(avs) != self.instance.m:
            raise StructureError(
                f"expected {self.instance.m} lists on side A, got {len(avs)}"
            )
        ups = tuple(
            _normalize_list(l, self.k, self.instance.u_name(i)) for i, l in enumerate(ups)
        )
        avs = tuple(
            _normalize_list(l, self.k, self.instance.a_name(j)) for j, l in enumerate(avs)
        )
        object.__setattr__(self, "lists_uprime", ups)
        object.__setattr__(self, "lists_a", avs)

    @property
    def n(self) -> int:
        return self.instance.n

    @property
    def m(self) -> int:
        return self.instance.m

    def bound(self) -> int:
        return equity_bound(self.instance, self.k)

    def transposed(self) -> KAssignment:
        """The same assignment on K_{m,n} with the two sides swapped."""
        return KAssignment(self.instance.transposed(), self.k, self.lists_a, self.lists_uprime)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "lists_uprime": [list(l) for l in self.lists_uprime],
            "lists_a": [list(l) for l in self.lists_a],
        }

    @classmethod
    def from_json(cls, obj) -> KAssignment:
        if not isinstance(obj, dict):
            raise StructureError("assignment JSON must be an object")
        missing = {"n", "m", "k", "lists_uprime", "lists_a"} - set(obj)
        if missing:
            raise StructureError(f"assignment JSON missing keys: {sorted(missing)}")
        for key in ("lists_uprime", "lists_a"):
            if not isinstance(obj[key], list) or not all(isinstance(l, list) for l in obj[key]):
                raise StructureError(f"{key} must be a list of color lists")
        return cls(
            Instance(obj["n"], obj["m"]),
            obj["k"],
            tuple(tuple(l) for l in obj["lists_uprime"]),
            tuple(tuple(l) for l in obj["lists_a"]),
        )


@dataclass(frozen=True)
class EquitableColoring:
    """A vertex -> color map claimed to be a proper, equity-bounded
    L-coloring.  The claim is validated by check_equitable, not here."""

    assignment: KAssignment
    colors_uprime: tuple[Color, ...]
    colors_a: tuple[Color, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors_uprime", tuple(self.colors_uprime))
        object.__setattr__(self, "colors_a", tuple(self.colors_a))

    def transposed(self) -> EquitableColoring:
        return EquitableColoring(self.assignment.transposed(), self.colors_a, self.colors_uprime)

    def to_json(self) -> dict:
        return {
            "colors_uprime": list(self.colors_uprime),
            "colors_a": list(self.colors_a),
        }

    @classmethod
    def from_json(cls, obj, assignment: KAssignment) -> EquitableColoring:
        if not isinstance(obj, dict):
            raise StructureError("coloring JSON must be an object")
        missing = {"colors_uprime", "colors_a"} - set(obj)
        if missing:
            raise StructureError(f"coloring JSON missing keys: {sorted(missing)}")
        for key in ("colors_uprime", "colors_a"):
            if not isinstance(obj[key], list) or not all(
                isinstance(c, int) and c >= 0 for c in obj[key]
            ):
                raise StructureError(f"{key} must be a list of non-negative integers")
        return cls(assignment, tuple(obj["colors_uprime"]), tuple(obj["colors_a"]))


class ViolationKind(Enum):
    LIST = "color-not-in-list"
    PROPERNESS = "color-on-both-sides"
    EQUITY = "color-class-too-large"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    color: Color
    vertex: str | None
    detail: str


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violations: tuple[Violation, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {
                    "kind": v.kind.value,
                    "color": v.color,
                    "vertex": v.vertex,
                    "detail": v.detail,
                }
                for v in self.violations
            ],
        }


def check_equitable(coloring: EquitableColoring) -> CheckResult:
    """Validate a claimed equitable L-coloring.

    Reports every violated constraint: a vertex colored outside its own
    list, a color used on both sides (the only way a monochromatic edge can
    arise in K_{n,m}), or a color class larger than ceil((n+m)/k).  Shape
    mismatches raise StructureError instead of failing the check.
    """
    L = coloring.assignment
    inst = L.instance
    if len(coloring.colors_uprime) != inst.n:
        raise StructureError(
            f"coloring has {len(coloring.colors_uprime)} colors on side A', expected {inst.n}"
        )
    if len(coloring.colors_a) != inst.m:
        raise StructureError(
            f"coloring has {len(coloring.colors_a)} colors on side A, expected {inst.m}"
        )

    violations: list[Violation] = []
    for i, (c, lst) in enumerate(zip(coloring.colors_uprime, L.lists_uprime)):
        if c not in lst:
            violations.append(
                Violation(
                    ViolationKind.LIST, c, inst.u_name(i),
                    f"{inst.u_name(i)} has color {c}, not in its list {list(lst)}",
                )
            )
    for j, (c, lst) in enumerate(zip(coloring.colors_a, L.lists_a)):
        if c not in lst:
            violations.append(
                Violation(
                    ViolationKind.LIST, c, inst.a_name(j),
                    f"{inst.a_name(j)} has color {c}, not in its list {list(lst)}",
                )
            )

    # Properness via the bipartite shortcut: a color on both sides yields a
    # monochromatic edge, same-side repeats never do.
    shared = sorted(set(coloring.colors_uprime) & set(coloring.colors_a))
    for c in shared:
        u_at = [inst.u_name(i) for i, x in enumerate(coloring.colors_uprime) if x == c]
        a_at = [inst.a_name(j) for j, x in enumerate(coloring.colors_a) if x == c]
        violations.append(
            Violation(
                ViolationKind.PROPERNESS, c, None,
                f"color {c} appears on both sides ({', '.join(u_at)} and {', '.join(a_at)})",
            )
        )

    bound = L.bound()
    sizes = Counter(coloring.colors_uprime) + Counter(coloring.colors_a)
    for c in sorted(sizes):
        if sizes[c] > bound:
            violations.append(
                Violation(
                    ViolationKind.EQUITY, c, None,
                    f"color {c} used {sizes[c]} times, allowed {bound}",
                )
            )

    return CheckResult(not violations, tuple(violations))
