"""Command-line front end.

Subcommands: decide, spectrum, color, verify, oracle-decide,
counterexample.  Assignment and coloring files are UTF-8 JSON matching the
schemas in core.  Exit codes: 0 success/verdict, 1 failed verification or
no coloring found / not choosable, 2 usage or structural error, 3 oracle
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .colorer import (
    GreedyRound,
    color_auto,
    color_distinct_reserve,
    color_pair_side,
)
from .core import (
    EquitableColoring,
    KAssignment,
    PreconditionError,
    StructureError,
    check_equitable,
)
from .criteria import classify, spectrum
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    OracleStatus,
    decide_choosable,
    find_equitable_coloring,
    uniform_counterexample,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(payload: dict, fmt: str, table: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(table)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise StructureError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path} is not valid JSON: {exc}") from exc


def _cmd_decide(args) -> int:
    verdict = classify(args.n, args.m, args.k)
    payload = {"n": args.n, "m": args.m, "k": args.k, **verdict.to_json()}
    table = (
        f"K_{{{args.n},{args.m}}} with k={args.k}: "
        f"{verdict.status.value} (rule {verdict.rule.value})"
    )
    _emit(payload, args.format, table)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    k_max = args.k_max if args.k_max is not None else args.n + args.m
    report = spectrum(args.n, args.m, k_max)
    _emit(report.to_json(), args.format, report.format_table())
    return EXIT_OK


def _cmd_color(args) -> int:
    L = KAssignment.from_json(_load_json(args.assignment))
    trace: list[GreedyRound] = []
    if args.algorithm == "auto":
        coloring, used = color_auto(L, trace)
    elif args.algorithm == "main":
        coloring, used = color_distinct_reserve(L, trace), "main"
    elif args.algorithm == "k2m":
        if L.n == 2:
            coloring = color_pair_side(L, trace)
        elif L.m == 2:
            coloring = color_pair_side(L.transposed(), trace).transposed()
        else:
            raise PreconditionError(f"no side of size 2 in K_{{{L.n},{L.m}}}")
        used = "k2m"
    else:
        coloring, used = find_equitable_coloring(L), "oracle"

    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for t, r in enumerate(trace, start=1):
                fh.write(
                    json.dumps(
                        {"t": t, "color": r.color, "vertices": list(r.vertices)}
                    )
                    + "\n"
                )

    if coloring is None:
        payload = {"algorithm": used, "coloring": None, "check": None}
        _emit(payload, args.format, "no equitable L-coloring exists for this assignment")
        return EXIT_NEGATIVE

    # Never trust the colorer output: re-verify with the checker.
    result = check_equitable(coloring)
    payload = {
        "algorithm": used,
        "coloring": coloring.to_json(),
        "check": result.to_json(),
    }
    lines = [f"algorithm: {used}"]
    lines.append("colors A': " + " ".join(str(c) for c in coloring.colors_uprime))
    lines.append("colors A : " + " ".join(str(c) for c in coloring.colors_a))
    lines.append("check: " + ("pass" if result.ok else "FAIL"))
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    L = KAssignment.from_json(_load_json(args.assignment))
    coloring = EquitableColoring.from_json(_load_json(args.coloring), L)
    result = check_equitable(coloring)
    lines = ["pass" if result.ok else "FAIL"]
    lines.extend(f"  {v.detail}" for v in result.violations)
    _emit(result.to_json(), args.format, "\n".join(lines))
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def _cmd_oracle_decide(args) -> int:
    verdict = decide_choosable(
        args.n,
        args.m,
        args.k,
        universe_size=args.universe,
        budget=args.budget,
        jobs=args.jobs,
    )
    table = (
        f"K_{{{args.n},{args.m}}} with k={args.k}: {verdict.status.value} "
        f"({verdict.assignments_examined} assignments, "
        f"{verdict.colorings_examined} colorings examined)"
    )
    if verdict.witness is not None:
        table += "\nwitness: " + json.dumps(verdict.witness.to_json())
    _emit(verdict.to_json(), args.format, table)
    return EXIT_OK if verdict.status is OracleStatus.CHOOSABLE else EXIT_NEGATIVE


def _cmd_counterexample(args) -> int:
    witness = uniform_counterexample(args.n, args.m, args.k)
    table = "uniform assignment with no equitable coloring:\n" + json.dumps(
        witness.to_json(), indent=2
    )
    _emit(witness.to_json(), args.format, table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqchoose",
        description="equitable list coloring of complete bipartite graphs K_{n,m}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("table", "json"), default="table",
            help="output mode (default: table)",
        )

    p = sub.add_parser("decide", help="criteria verdict for one (n, m, k)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("spectrum", help="verdicts for k = 1..k_max")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument(
        "k_max", type=int, nargs="?", default=None,
        help="default n+m, beyond which the answer is always YES",
    )
    add_format(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("color", help="construct an equitable coloring for an assignment file")
    p.add_argument("assignment", help="k-assignment JSON file")
    p.add_argument(
        "--algorithm", choices=("auto", "main", "k2m", "oracle"), default="auto",
    )
    p.add_argument("--trace", help="write greedy rounds as JSON lines to this file")
    add_format(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against an assignment file")
    p.add_argument("assignment")
    p.add_argument("coloring")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle-decide", help="exhaustive choosability decision")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--universe", type=int, default=None, help="cap on distinct colors")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    add_format(p)
    p.set_defaults(func=_cmd_oracle_decide)

    p = sub.add_parser("counterexample", help="uniform assignment defeating (n, m, k)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StructureError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
