"""Command-line interface: construct, verify, sweep, info.

Exit codes: 0 success (for verify: the code is LCD and MDS), 1 verify found a
code that is not, 2 usage or parameter errors (including malformed input),
3 no covered construction applies, 4 a constructed code failed verification
(always a bug), 5 work budget exceeded. The default verification budget is
10^6 enumerated codewords, overridable with --budget or LCDMDS_BUDGET.

All JSON output is canonical (sorted keys, fixed indentation, no timestamps)
so identical inputs produce byte-identical bytes regardless of parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from time import perf_counter

from .construct import (
    ALL_THEOREMS,
    applicable_conditions,
    construct_auto,
    construct_divisor,
    construct_extended,
    construct_large_nk,
    construct_prime_power,
    construct_window,
    verify_report,
    _prime_power_level,
)
from .errors import (
    BudgetExceeded,
    FieldMismatch,
    LcdMdsError,
    NoConstructionApplies,
    ParameterError,
    TheoremViolation,
)
from .fields import Field, field, field_from_order
from .linear import LinearCode

DEFAULT_CLI_BUDGET = 10**6
BUDGET_ENV = "LCDMDS_BUDGET"

EXIT_OK = 0
EXIT_VERDICT_FAIL = 1
EXIT_USAGE = 2
EXIT_NO_CONSTRUCTION = 3
EXIT_VIOLATION = 4
EXIT_BUDGET = 5


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _resolve_field(args) -> Field:
    if args.q is not None:
        if args.p is not None or args.e is not None:
            raise ParameterError("give either --q or --p/--e, not both")
        return field_from_order(args.q)
    if args.p is None:
        raise ParameterError("a field is required: --q Q or --p P [--e E]")
    return field(args.p, args.e if args.e is not None else 1)


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_CLI_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ParameterError(f"{BUDGET_ENV} must be an integer, got {raw!r}")


def _budget(args) -> int:
    return args.budget if args.budget is not None else _default_budget()


# ---------- construct ----------

THEOREM_FLAGS = {
    "auto": None,
    "extended": "ExtendedQPlus1",
    "divisor": "DivisorOfQMinus1",
    "prime-power": "PrimePowerLength",
    "large-nk": "LargeNPlusK",
    "window": "Window2n",
}


def _run_named_construction(F: Field, args):
    n, k = args.n, args.k
    name = args.theorem
    if name == "auto":
        return construct_auto(
            F, n, k, gamma=args.gamma, tail=args.tail, permutation=args.permutation
        )
    if name == "extended":
        if n != F.q + 1:
            raise ParameterError(f"extended codes have n = q + 1 = {F.q + 1}, got {n}")
        return construct_extended(F, k, gamma=args.gamma, permutation=args.permutation)
    if name == "divisor":
        return construct_divisor(F, n, k, tail=args.tail)
    if name == "prime-power":
        level = _prime_power_level(F, n)
        if level is None:
            raise ParameterError(f"n = {n} is not a power p^l of p = {F.p} with l <= {F.e}")
        return construct_prime_power(F, level, k, gamma=args.gamma)
    if name == "large-nk":
        return construct_large_nk(F, n, k, permutation=args.permutation)
    if name == "window":
        return construct_window(F, n, k, permutation=args.permutation)
    raise ParameterError(f"unknown theorem tag {name!r}")


def cmd_construct(args) -> int:
    F = _resolve_field(args)
    tail = args.tail
    if tail is not None and len(tail) == 1:
        tail = tail[0]
    args.tail = tail
    report = _run_named_construction(F, args)
    if not args.skip_verify:
        verify_report(report, _budget(args))
    if args.format == "json":
        sys.stdout.write(_dumps(report.to_dict()))
    else:
        code = report.spec.generator()
        print(f"theorem: {report.theorem}")
        print(f"field:   GF({F.q}) = GF({F.p}^{F.e}), modulus {list(F.modulus)}")
        print(f"code:    [{code.n}, {code.k}] over GF({F.q})")
        print(f"params:  {json.dumps(report.params, sort_keys=True)}")
        if report.verified is not None:
            print(f"verified: {json.dumps(report.verified, sort_keys=True)}")
        print("generator:")
        for row in code.gen:
            print("  " + " ".join(f"{x:>3d}" for x in row))
    return EXIT_OK


# ---------- verify ----------


def _load_code(path: str) -> LinearCode:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParameterError(f"cannot read code file {path!r}: {exc}")
    try:
        return LinearCode.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LcdMdsError):
            raise
        raise ParameterError(f"malformed code file {path!r}: {exc}")


def cmd_verify(args) -> int:
    code = _load_code(args.input)
    hull = code.hull_dimension()
    mds, route, dist = code.mds_check(_budget(args))
    verdict = {
        "n": code.n,
        "k": code.k,
        "hull_dimension": hull,
        "is_lcd": hull == 0,
        "is_mds": mds,
        "mds_route": route,
        "min_distance": dist,
    }
    sys.stdout.write(_dumps(verdict))
    return EXIT_OK if (hull == 0 and mds) else EXIT_VERDICT_FAIL


# ---------- sweep ----------


def _sweep_cell(F: Field, n: int, k: int, budget: int):
    row = {
        "n": n,
        "k": k,
        "condition": "none",
        "status": "no_construction",
        "verified": False,
        "hull_dimension": None,
        "is_mds": None,
        "mds_route": None,
        "min_distance": None,
    }
    start = perf_counter()
    try:
        report = construct_auto(F, n, k)
    except NoConstructionApplies:
        return row, perf_counter() - start
    row["condition"] = report.theorem
    try:
        verify_report(report, budget)
        v = report.verified
        row.update(
            status="ok",
            verified=True,
            hull_dimension=v["hull_dimension"],
            is_mds=v["is_mds"],
            mds_route=v["mds_route"],
            min_distance=v["min_distance"],
        )
    except BudgetExceeded:
        row["status"] = "budget_exceeded"
    except TheoremViolation:
        v = report.verified
        row.update(
            status="violation",
            hull_dimension=v["hull_dimension"],
            is_mds=v["is_mds"],
            mds_route=v["mds_route"],
            min_distance=v["min_distance"],
        )
    return row, perf_counter() - start


def cmd_sweep(args) -> int:
    F = _resolve_field(args)
    if F.p == 2:
        raise ParameterError(f"q = {F.q} has even characteristic; the sweep needs odd q")
    if F.q <= 3:
        raise ParameterError(f"q = {F.q} is too small; the sweep needs q > 3")
    n_max = args.n_max if args.n_max is not None else F.q + 1
    if n_max > F.q + 1:
        raise ParameterError(f"--n-max cannot exceed q + 1 = {F.q + 1}")
    budget = _budget(args)
    grid = [(n, k) for n in range(4, n_max + 1) for k in range(2, n // 2 + 1)]

    def work(cell):
        n, k = cell
        return _sweep_cell(F, n, k, budget)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(work, grid))
    else:
        results = [work(cell) for cell in grid]

    rows = [row for row, _ in results]
    result = {
        "q": F.q,
        "field": F.to_dict(),
        "n_max": n_max,
        "budget": budget,
        "rows": rows,
    }

    header = f"{'n':>4} {'k':>3}  {'condition':<18} {'status':<16} {'hull':>4} {'mds':>4}  {'route':<15} {'d':>3} {'ms':>8}"
    print(header)
    print("-" * len(header))
    for row, secs in results:
        hull = "-" if row["hull_dimension"] is None else str(row["hull_dimension"])
        mds = "-" if row["is_mds"] is None else ("yes" if row["is_mds"] else "no")
        dist = "-" if row["min_distance"] is None else str(row["min_distance"])
        route = row["mds_route"] or "-"
        print(
            f"{row['n']:>4} {row['k']:>3}  {row['condition']:<18} {row['status']:<16} "
            f"{hull:>4} {mds:>4}  {route:<15} {dist:>3} {secs * 1000:>8.1f}"
        )

    payload = _dumps(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(payload)

    if any(row["status"] == "violation" for row in rows):
        return EXIT_VIOLATION
    if any(row["status"] == "budget_exceeded" for row in rows):
        return EXIT_BUDGET
    return EXIT_OK


# ---------- info ----------


def cmd_info(args) -> int:
    F = _resolve_field(args)
    info = {
        "p": F.p,
        "e": F.e,
        "q": F.q,
        "modulus": list(F.modulus),
        "primitive_element": F.primitive_element,
        "theorems": list(ALL_THEOREMS),
    }
    if args.n is not None and args.k is not None:
        info["applicable_conditions"] = applicable_conditions(F, args.n, args.k)
    sys.stdout.write(_dumps(info))
    return EXIT_OK


# ---------- plumbing ----------


def _add_field_args(sub):
    sub.add_argument("--q", type=int, help="field order (prime power)")
    sub.add_argument("--p", type=int, help="characteristic (with --e)")
    sub.add_argument("--e", type=int, help="extension degree (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcdmds",
        description="Construct and verify complementary-dual MDS codes from "
        "generalized Reed-Solomon codes over odd-characteristic fields.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("construct", help="build one code and print its report")
    _add_field_args(c)
    c.add_argument("--n", type=int, required=True, help="code length")
    c.add_argument("--k", type=int, required=True, help="code dimension")
    c.add_argument(
        "--theorem",
        choices=sorted(THEOREM_FLAGS),
        default="auto",
        help="which family to use (default: first applicable)",
    )
    c.add_argument("--gamma", type=int, help="override the scaling element")
    c.add_argument(
        "--tail",
        type=_int_list,
        help="override tail multipliers for the divisor family (one value or a comma list)",
    )
    c.add_argument(
        "--permutation",
        type=_int_list,
        help="override the element labeling (comma list of all q element indices)",
    )
    c.add_argument("--budget", type=int, help="verification work budget")
    c.add_argument("--skip-verify", action="store_true", help="emit the report unverified")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(func=cmd_construct)

    v = subs.add_parser("verify", help="check a generator matrix file for LCD and MDS")
    v.add_argument("input", help="JSON file with 'field' and 'generator' ('-' for stdin)")
    v.add_argument("--budget", type=int, help="verification work budget")
    v.set_defaults(func=cmd_verify)

    s = subs.add_parser("sweep", help="run every admissible (n, k) for one field")
    _add_field_args(s)
    s.add_argument("--n-max", type=int, help="largest length to try (default q + 1)")
    s.add_argument("--budget", type=int, help="verification work budget per cell")
    s.add_argument("--jobs", type=int, default=1, help="worker threads")
    s.add_argument("--output", help="write the JSON result here instead of stdout")
    s.set_defaults(func=cmd_sweep)

    i = subs.add_parser("info", help="describe a field and the covered families")
    _add_field_args(i)
    i.add_argument("--n", type=int, help="with --k: list conditions matching (n, k)")
    i.add_argument("--k", type=int)
    i.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoConstructionApplies as exc:
        print(f"lcdmds: {exc}", file=sys.stderr)
        return EXIT_NO_CONSTRUCTION
    except TheoremViolation as exc:
        print(f"lcdmds: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BudgetExceeded as exc:
        print(f"lcdmds: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParameterError, FieldMismatch) as exc:
        print(f"lcdmds: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
