"""Command-line front end.

Exit codes: 0 on success; 1 when a solve reports NOT_FOUND or a
membership check queried with --expect-in is not IN; 2 on usage errors;
3 on malformed input files or parameter strings.  Output for a fixed
argv and seed is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .gf2poly import ideal_member, surviving_monomials
from .momentcurve import (IntervalFamily, arrangement_to_jsonable,
                          count_bisections, enumerate_bisections)
from .parity import anchored_blocks_parity, equal_blocks_parity
from .testmap import SolverConfig, measures_from_jsonable, solve_bisection
from .verdicts import (Status, frontier_csv, frontier_json, frontier_table,
                       verdict)
from .figures import frontier_svg


class _InputFormatError(Exception):
    """Maps to exit code 3."""


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _cmd_lambda_check(args) -> int:
    v = verdict(args.d, args.j, args.k)
    if args.format == "json":
        _emit(json.dumps(v.to_jsonable(), indent=2))
    else:
        _emit(f"(d={v.d}, j={v.j}, k={v.k}): {v.status}\n"
              f"certificate: {v.certificate}")
    if args.expect_in and v.status is not Status.IN:
        return 1
    return 0


def _cmd_lambda_table(args) -> int:
    table = frontier_table(args.k, args.jmax, args.dmax_search)
    if args.format == "json":
        sys.stdout.write(frontier_json(table))
    else:
        sys.stdout.write(frontier_csv(table))
    return 0


def _cmd_lambda_figure(args) -> int:
    table = frontier_table(args.k, args.jmax, args.dmax_search)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(frontier_svg(table))
    return 0


def _cmd_ideal_member(args) -> int:
    member = ideal_member(args.j, args.k, args.d)
    surviving = surviving_monomials(args.j, args.k, args.d)
    assert member == (len(surviving) == 0)
    if args.format == "json":
        _emit(json.dumps({"d": args.d, "j": args.j, "k": args.k,
                          "member": member,
                          "surviving_monomials": len(surviving)}, indent=2))
    else:
        _emit(f"member={'true' if member else 'false'} "
              f"surviving_monomials={len(surviving)}")
    return 0


def _cmd_parity_lemma1(args) -> int:
    p = equal_blocks_parity(args.d, args.k)
    if args.format == "json":
        _emit(json.dumps({"d": args.d, "k": args.k, "parity": str(p)},
                         indent=2))
    else:
        _emit(str(p))
    return 0


def _cmd_parity_lemma2(args) -> int:
    p = anchored_blocks_parity(args.d, args.k, args.ell)
    if args.format == "json":
        _emit(json.dumps({"d": args.d, "k": args.k, "ell": args.ell,
                          "parity": str(p)}, indent=2))
    else:
        _emit(str(p))
    return 0


def _cmd_count(args) -> int:
    n = count_bisections(args.d, args.k, args.ell)
    if args.format == "json":
        _emit(json.dumps({"d": args.d, "k": args.k, "ell": args.ell,
                          "count": n}, indent=2))
    else:
        _emit(str(n))
    return 0


def _parse_params(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(",") if tok.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise _InputFormatError(f"bad parameter list {text!r}: {exc}") from exc


def _cmd_enumerate(args) -> int:
    params = _parse_params(args.params)
    try:
        family = IntervalFamily(d=args.d, parameters=params,
                                anchor_count=args.ell)
        arrangements = enumerate_bisections(family, args.k)
    except ValueError as exc:
        raise _InputFormatError(str(exc)) from exc
    _emit(json.dumps([arrangement_to_jsonable(a) for a in arrangements],
                     indent=2))
    return 0


def _resolve_seed(args_seed: int | None) -> int:
    if args_seed is not None:
        return args_seed
    env = os.environ.get("HYPERBISECT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise _InputFormatError(f"HYPERBISECT_SEED must be an integer, "
                                f"got {env!r}") from exc


def _cmd_solve(args) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputFormatError(f"cannot read {args.input}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputFormatError(f"invalid JSON in {args.input}: {exc}") from exc
    try:
        d, measures = measures_from_jsonable(data)
    except ValueError as exc:
        raise _InputFormatError(str(exc)) from exc
    config = SolverConfig(tolerance=args.tol, seed=_resolve_seed(args.seed),
                          max_restarts=args.restarts)
    result = solve_bisection(measures, args.k, config)
    _emit(json.dumps(result.to_jsonable(), indent=2))
    return 0 if result.success else 1


def _add_format(parser, default: str, choices=("text", "json")) -> None:
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperbisect",
        description="Bisecting measures with affine hyperplane arrangements: "
                    "membership verdicts, exact constructions, numerical "
                    "solving.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lambda = sub.add_parser("lambda", help="membership verdicts")
    lam_sub = p_lambda.add_subparsers(dest="subcommand", required=True)

    p_check = lam_sub.add_parser("check", help="decide one triple")
    p_check.add_argument("d", type=int)
    p_check.add_argument("j", type=int)
    p_check.add_argument("k", type=int)
    p_check.add_argument("--expect-in", action="store_true",
                         help="exit 1 unless the verdict is IN")
    _add_format(p_check, "text")
    p_check.set_defaults(func=_cmd_lambda_check)

    p_table = lam_sub.add_parser("table", help="per-criterion frontier")
    p_table.add_argument("--k", type=int, required=True)
    p_table.add_argument("--jmax", type=int, required=True)
    p_table.add_argument("--dmax-search", type=int, default=None,
                         help="search bound for d (default 4*j per row)")
    _add_format(p_table, "csv", choices=("csv", "json"))
    p_table.set_defaults(func=_cmd_lambda_table)

    p_fig = lam_sub.add_parser("figure", help="frontier scatter plot")
    p_fig.add_argument("--k", type=int, required=True)
    p_fig.add_argument("--jmax", type=int, required=True)
    p_fig.add_argument("--dmax-search", type=int, default=None)
    p_fig.add_argument("--out", required=True, help="output .svg path")
    p_fig.set_defaults(func=_cmd_lambda_figure)

    p_ideal = sub.add_parser("ideal", help="truncated power membership")
    ideal_sub = p_ideal.add_subparsers(dest="subcommand", required=True)
    p_member = ideal_sub.add_parser("member")
    p_member.add_argument("d", type=int)
    p_member.add_argument("j", type=int)
    p_member.add_argument("k", type=int)
    _add_format(p_member, "text")
    p_member.set_defaults(func=_cmd_ideal_member)

    p_parity = sub.add_parser("parity", help="block-count parities")
    parity_sub = p_parity.add_subparsers(dest="subcommand", required=True)
    p_l1 = parity_sub.add_parser("lemma1", help="equal blocks")
    p_l1.add_argument("d", type=int)
    p_l1.add_argument("k", type=int)
    _add_format(p_l1, "text")
    p_l1.set_defaults(func=_cmd_parity_lemma1)
    p_l2 = parity_sub.add_parser("lemma2", help="anchored blocks")
    p_l2.add_argument("d", type=int)
    p_l2.add_argument("k", type=int)
    p_l2.add_argument("ell", type=int)
    _add_format(p_l2, "text")
    p_l2.set_defaults(func=_cmd_parity_lemma2)

    p_count = sub.add_parser("count", help="closed-form arrangement count")
    p_count.add_argument("d", type=int)
    p_count.add_argument("k", type=int)
    p_count.add_argument("--ell", type=int, default=0)
    _add_format(p_count, "text")
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate",
                            help="exact bisecting arrangements for intervals")
    p_enum.add_argument("d", type=int)
    p_enum.add_argument("k", type=int)
    p_enum.add_argument("--ell", type=int, default=0)
    p_enum.add_argument("--params", required=True,
                        help="comma-separated rational endpoints, e.g. "
                             "\"1,2,3,4,11/2,6,7,8\"")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_solve = sub.add_parser("solve", help="numerical bisection search")
    p_solve.add_argument("--input", required=True,
                         help="measure collection JSON file")
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--tol", type=float, default=1e-2)
    p_solve.add_argument("--seed", type=int, default=None,
                         help="falls back to HYPERBISECT_SEED, then 0")
    p_solve.add_argument("--restarts", type=int, default=20)
    p_solve.set_defaults(func=_cmd_solve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
