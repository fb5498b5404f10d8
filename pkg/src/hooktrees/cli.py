"""Command-line interface for batch computations.

Subcommands: ``series`` (solve the family equations), ``rho`` and
``rho-forest`` (extract the hook weight table), ``verify`` (certify the
tree identity by exhaustive enumeration) and ``labellings`` (count the
increasing labellings of one tree three ways).

Exit codes: 0 success/verified, 1 verified-false, 2 input error,
3 the weight function is undefined (a vanishing denominator).  Rationals
always print as ``p`` or ``p/q``, never as decimals; identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import __version__, families, gfparse, hookcalc, treeoracle
from .errors import DenominatorVanishes, HookTreesError
from .rational import rational_from_string, rational_to_string
from .series import TruncatedSeries

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2
EXIT_UNDEFINED = 3

MAX_VERIFY_N = 12

_BUILTIN_SPEC = re.compile(r"^[a-z]+(:\S*)?$")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hooktrees",
        description="Exact hook-length weight calculus for weighted ordered trees.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_phi: bool = True) -> None:
        if with_phi:
            p.add_argument(
                "--phi",
                required=True,
                help="degree-weight family: builtin spec (binary, kary:3, plane, "
                "labelled, yang:1/2,4, polyalpha:2) or an expression in t",
            )
            p.add_argument(
                "--param",
                action="append",
                default=[],
                metavar="NAME=P/Q",
                help="bind an expression parameter to an exact rational (repeatable)",
            )
            p.add_argument(
                "--allow-degenerate",
                action="store_true",
                help="run even if the family fails the standing assumptions",
            )
        p.add_argument(
            "--output",
            choices=("plain", "json", "csv"),
            default="plain",
            help="output format (default plain)",
        )

    p = sub.add_parser("series", help="solve T = z*phi(T) or T' = phi(T)")
    p.add_argument("--model", choices=("sg", "inc"), required=True,
                   help="sg: simply generated (fixed point); inc: increasing (ODE)")
    p.add_argument("--order", type=int, required=True)
    add_common(p)

    p = sub.add_parser("rho", help="hook weight table from a tree counting series")
    p.add_argument("--from-model", choices=("sg", "inc"), dest="from_model",
                   help="take F from the sg or inc solution for phi")
    p.add_argument("--F", dest="f_expr", metavar="EXPR",
                   help="take F from an expression in t")
    p.add_argument("--order", type=int, required=True)
    add_common(p)

    p = sub.add_parser("rho-forest", help="hook weight table from a forest series G = phi(F)")
    p.add_argument("--G", dest="g_expr", metavar="EXPR", required=True,
                   help="the forest series, an expression in t with G(0) = phi_0")
    p.add_argument("--order", type=int, required=True)
    add_common(p)

    p = sub.add_parser("verify", help="certify the identity by exhaustive enumeration")
    p.add_argument("--rho", required=True,
                   help="named table (1, 1/n, n) or explicit comma-separated rationals")
    p.add_argument("--max-n", type=int, required=True, dest="max_n",
                   help=f"check all tree sizes 1..max-n (at most {MAX_VERIFY_N})")
    add_common(p)

    p = sub.add_parser("labellings", help="count increasing labellings of one tree")
    p.add_argument("--tree", required=True,
                   help="balanced-parenthesis word, e.g. ((())())")
    add_common(p, with_phi=False)

    return parser


# --- input helpers ----------------------------------------------------------------


def _parse_params(items: list[str]) -> dict:
    binding = {}
    for item in items:
        name, eq, value = item.partition("=")
        name = name.strip()
        if not eq or not name.isidentifier():
            raise ValueError(f"malformed --param {item!r}, expected NAME=P/Q")
        if name in binding:
            raise ValueError(f"parameter {name!r} bound twice")
        binding[name] = rational_from_string(value)
    return binding


def _resolve_family(text: str, binding: dict) -> families.DegreeWeightFamily:
    head = text.strip().partition(":")[0]
    if _BUILTIN_SPEC.match(text.strip()) and head in families.BUILTIN_NAMES:
        return families.from_spec(text.strip())
    return families.from_expression(text, binding)


def _check_family(family, kmax: int, allow_degenerate: bool) -> None:
    report = family.validate(kmax)
    for warning in report.warnings:
        print(f"warning: {family.name}: {warning}", file=sys.stderr)
    if not report.ok and not allow_degenerate:
        for violation in report.violations:
            print(f"error: {family.name}: {violation}", file=sys.stderr)
        print("use --allow-degenerate to run anyway", file=sys.stderr)
        raise _Refused()


class _Refused(Exception):
    """Family validation failed and no override was given."""


def _evaluate_expression(text: str, binding: dict, order: int) -> TruncatedSeries:
    return gfparse.evaluate(gfparse.parse(text), binding, order)


def _emit_table(args, payload: dict, csv_rows: list[list[str]], plain: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(payload))
    elif args.output == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(csv_rows)
        sys.stdout.write(buffer.getvalue())
    else:
        for line in plain:
            print(line)


# --- subcommands -------------------------------------------------------------------


def _cmd_series(args) -> int:
    binding = _parse_params(args.param)
    if args.order < 1:
        raise ValueError("--order must be at least 1")
    family = _resolve_family(args.phi, binding)
    _check_family(family, max(args.order, 2), args.allow_degenerate)
    if args.model == "sg":
        result = hookcalc.solve_simply_generated(family, args.order)
        counts = None
    else:
        result = hookcalc.solve_increasing(family, args.order)
        counts = hookcalc.egf_counts(result)
    strings = result.to_strings()

    payload = {"series": strings}
    plain = ["coefficients " + " ".join(strings)]
    header = ["n", "coefficient"]
    rows = [[str(n), s] for n, s in enumerate(strings)]
    if counts is not None:
        count_strings = [rational_to_string(c) for c in counts]
        payload["counts"] = [None] + count_strings[1:]
        plain.append("counts _ " + " ".join(count_strings[1:]))
        header.append("count")
        rows[0].append("")
        for n in range(1, len(rows)):
            rows[n].append(count_strings[n])
    _emit_table(args, payload, [header] + rows, plain)
    return EXIT_OK


def _cmd_rho(args) -> int:
    binding = _parse_params(args.param)
    if args.order < 1:
        raise ValueError("--order must be at least 1")
    if (args.from_model is None) == (args.f_expr is None):
        raise ValueError("rho needs exactly one of --from-model and --F")
    family = _resolve_family(args.phi, binding)
    _check_family(family, max(args.order, 2), args.allow_degenerate)
    if args.from_model == "sg":
        F = hookcalc.solve_simply_generated(family, args.order)
    elif args.from_model == "inc":
        F = hookcalc.solve_increasing(family, args.order)
    else:
        F = _evaluate_expression(args.f_expr, binding, args.order)
    rho = hookcalc.rho_from_series(F, family, args.order)
    _emit_rho(args, rho)
    return EXIT_OK


def _cmd_rho_forest(args) -> int:
    binding = _parse_params(args.param)
    if args.order < 1:
        raise ValueError("--order must be at least 1")
    family = _resolve_family(args.phi, binding)
    _check_family(family, max(args.order, 2), args.allow_degenerate)
    G = _evaluate_expression(args.g_expr, binding, args.order)
    rho = hookcalc.rho_from_forest(G, family, args.order)
    _emit_rho(args, rho)
    return EXIT_OK


def _emit_rho(args, rho: hookcalc.HookWeightFunction) -> None:
    strings = rho.to_strings()
    rows = [["n", "rho"]] + [[str(n + 1), s] for n, s in enumerate(strings)]
    _emit_table(args, {"rho": strings}, rows, [" ".join(strings)])


def _cmd_verify(args) -> int:
    binding = _parse_params(args.param)
    if not 1 <= args.max_n <= MAX_VERIFY_N:
        raise ValueError(f"--max-n must be in 1..{MAX_VERIFY_N}")
    family = _resolve_family(args.phi, binding)
    _check_family(family, max(args.max_n, 2), args.allow_degenerate)
    rho = hookcalc.HookWeightFunction.from_spec(args.rho, args.max_n)
    # both sides are recomputed from scratch on every run: the right side
    # by the coefficient recurrence, the left by exhaustive enumeration
    rhs_series = hookcalc.series_from_rho(rho, family, args.max_n)
    all_equal = True
    reports = []
    for n in range(1, args.max_n + 1):
        lhs = treeoracle.weighted_sum(n, family, rho)
        rhs = rhs_series.coeff(n)
        equal = lhs == rhs
        all_equal &= equal
        reports.append((n, rational_to_string(lhs), rational_to_string(rhs), equal))

    if args.output == "json":
        for n, lhs, rhs, equal in reports:
            print(json.dumps({"n": n, "lhs": lhs, "rhs": rhs, "equal": equal}))
    elif args.output == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "lhs", "rhs", "equal"])
        for n, lhs, rhs, equal in reports:
            writer.writerow([str(n), lhs, rhs, "true" if equal else "false"])
        sys.stdout.write(buffer.getvalue())
    else:
        for n, lhs, rhs, equal in reports:
            print(f"n={n} lhs={lhs} rhs={rhs} equal={'true' if equal else 'false'}")
    return EXIT_OK if all_equal else EXIT_FALSIFIED


def _cmd_labellings(args) -> int:
    tree = treeoracle.parse_tree(args.tree)
    hooks = treeoracle.hook_lengths(tree)
    by_hook = treeoracle.labellings_hook(tree)
    by_recursion = treeoracle.labellings_recursive(tree)
    by_brute = (
        treeoracle.labellings_bruteforce(tree)
        if tree.size <= treeoracle.BRUTE_FORCE_LIMIT
        else None
    )
    results = [by_hook, by_recursion] + ([by_brute] if by_brute is not None else [])
    agree = by_hook.denominator == 1 and all(r == results[0] for r in results)

    hook_str = rational_to_string(by_hook)
    payload = {
        "tree": treeoracle.format_tree(tree),
        "n": tree.size,
        "hooks": hooks,
        "hook_formula": hook_str,
        "recursive": by_recursion,
        "bruteforce": by_brute,
        "agree": agree,
    }
    plain = [
        f"tree {payload['tree']}",
        f"n {tree.size}",
        "hooks " + " ".join(str(h) for h in hooks),
        f"hook-formula {hook_str}",
        f"recursive {by_recursion}",
        f"bruteforce {by_brute if by_brute is not None else 'skipped'}",
        f"agree {'true' if agree else 'false'}",
    ]
    rows = [["field", "value"]] + [
        [key, "" if value is None else str(value)]
        for key, value in (
            ("tree", payload["tree"]),
            ("n", tree.size),
            ("hooks", " ".join(str(h) for h in hooks)),
            ("hook-formula", hook_str),
            ("recursive", by_recursion),
            ("bruteforce", by_brute),
            ("agree", "true" if agree else "false"),
        )
    ]
    _emit_table(args, payload, rows, plain)
    return EXIT_OK if agree else EXIT_FALSIFIED


_HANDLERS = {
    "series": _cmd_series,
    "rho": _cmd_rho,
    "rho-forest": _cmd_rho_forest,
    "verify": _cmd_verify,
    "labellings": _cmd_labellings,
}


def main(argv: list[str] | None = None) -> int:
    """Run one command; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _Refused:
        return EXIT_INPUT
    except DenominatorVanishes as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (HookTreesError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
