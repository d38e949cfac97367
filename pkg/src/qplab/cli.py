"""Command-line front end: verification runs, coefficient tables, family
exploration and machine-readable exports.

Exit status contract: 0 when everything requested passes, 1 when at least
one identity mismatches, 2 for usage errors.  The environment variable
QPLAB_MAX_ORDER caps every requested order and enumeration depth.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .series import Series, SeriesError
from . import mocktheta, partitions, registry
from .family_gf import FAMILY_NAMES, family_gf_series

MAX_ORDER_ENV = "QPLAB_MAX_ORDER"


def _order_cap() -> Optional[int]:
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit(f"error: {MAX_ORDER_ENV} must be an integer, got {raw!r}")
    return max(cap, 0)


def _capped(order: int) -> int:
    cap = _order_cap()
    return order if cap is None else min(order, cap)


# ----------------------------------------------------------------------
# verify

def _format_report(report: registry.IdentityReport, expected_mismatch: bool) -> str:
    if report.status == registry.STATUS_PASS:
        label = "PASS"
        detail = ""
    elif report.status == registry.STATUS_MISMATCH and expected_mismatch:
        label = "XFAIL"
        m = report.mismatch
        detail = f"  mismatch at n={m.index}: lhs={m.lhs} rhs={m.rhs} (expected)"
    elif report.status == registry.STATUS_MISMATCH:
        label = "FAIL"
        m = report.mismatch
        detail = f"  mismatch at n={m.index}: lhs={m.lhs} rhs={m.rhs}"
    else:
        label = "SKIP"
        detail = f"  {report.skipped_reason}"
    return (
        f"{label:<6} {report.id:<34} order={report.order_checked:<4}"
        f" {report.elapsed_ms:>5}ms{detail}"
    )


def _verify_exit_code(reports: Sequence[registry.IdentityReport]) -> int:
    failed = False
    for r in reports:
        if r.id == registry.NEGATIVE_CONTROL_ID:
            if registry.control_misbehaved(r):
                failed = True
            continue
        if r.status != registry.STATUS_PASS:
            failed = True
    return 1 if failed else 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.order is not None and args.order < 1:
        print("error: --order must be at least 1", file=sys.stderr)
        return 2
    order = None if args.order is None else _capped(args.order)
    if args.id is not None:
        try:
            reports = [registry.verify(args.id, order)]
        except registry.RegistryError as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return 2
    else:
        reports = registry.verify_all(order)

    if args.json:
        docs = [r.to_json_dict() for r in reports]
        print(json.dumps(docs[0] if args.id is not None else docs, indent=2))
    else:
        counts = {"pass": 0, "fail": 0, "xfail": 0}
        for r in reports:
            expected = r.id == registry.NEGATIVE_CONTROL_ID and not registry.control_misbehaved(r)
            print(_format_report(r, expected_mismatch=expected))
            if r.status == registry.STATUS_PASS:
                counts["pass"] += 1
            elif expected:
                counts["xfail"] += 1
            else:
                counts["fail"] += 1
        summary = f"{counts['pass']} passed, {counts['fail']} failed"
        if counts["xfail"]:
            summary += f", {counts['xfail']} expected mismatch (negative control)"
        print(summary)
    return _verify_exit_code(reports)


# ----------------------------------------------------------------------
# coeffs

def _parse_rational(text: str, order: int) -> Series:
    """Parse integer polynomial arithmetic in q into a truncated series.

    Grammar: + - * / ^ with parentheses, the variable q and integer
    literals.  Division inverts the divisor, so its constant term must be
    a unit; exponents may be negative for unit-constant bases.
    """
    tokens: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()q":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise SeriesError(f"unexpected character {ch!r} in rational expression")
    pos = 0

    def peek() -> Optional[str]:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> str:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_expr() -> Series:
        node = parse_term()
        while peek() in ("+", "-"):
            op = take()
            rhs = parse_term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def parse_term() -> Series:
        node = parse_unary()
        while peek() in ("*", "/"):
            op = take()
            rhs = parse_unary()
            node = node * rhs if op == "*" else node * rhs.invert()
        return node

    def parse_unary() -> Series:
        if peek() == "-":
            take()
            return -parse_unary()
        if peek() == "+":
            take()
            return parse_unary()
        return parse_power()

    def parse_power() -> Series:
        base = parse_atom()
        if peek() == "^":
            take()
            negative = False
            if peek() == "-":
                take()
                negative = True
            tok = take()
            if not tok.isdigit():
                raise SeriesError("exponent must be an integer")
            k = int(tok)
            if negative:
                base = base.invert()
            out = Series.one(order)
            for _ in range(k):
                out = out * base
            return out
        return base

    def parse_atom() -> Series:
        tok = peek()
        if tok == "(":
            take()
            node = parse_expr()
            if peek() != ")":
                raise SeriesError("unbalanced parentheses in rational expression")
            take()
            return node
        if tok == "q":
            take()
            return Series.monomial(1, order)
        if tok is not None and tok.isdigit():
            take()
            return Series.one(order).scale(int(tok))
        raise SeriesError(f"unexpected token {tok!r} in rational expression")

    result = parse_expr()
    if pos != len(tokens):
        raise SeriesError(f"trailing tokens in rational expression: {tokens[pos:]}")
    return result


def _coeff_target_series(target: str, order: int) -> Series:
    simple = {
        "omega": lambda: mocktheta.omega(order),
        "psi": lambda: mocktheta.psi(order),
        "nu": lambda: mocktheta.nu(order),
        "nu-neg": lambda: mocktheta.nu(order, sign=-1),
        "theta": lambda: mocktheta.theta_squares(order),
        "theta-alt": lambda: mocktheta.theta_squares(order, alternating=True),
    }
    if target in simple:
        return simple[target]()
    if target.startswith("family:"):
        parts = target.split(":")
        if len(parts) == 2 or (len(parts) == 3 and parts[2] == "signed"):
            name = parts[1]
            if name not in FAMILY_NAMES:
                raise KeyError(f"unknown family {name!r}")
            return family_gf_series(name, signed=len(parts) == 3, order=order)
        raise KeyError(f"malformed family target {target!r}")
    if target.startswith("rational:"):
        return _parse_rational(target[len("rational:"):], order)
    raise KeyError(f"unknown coefficient target {target!r}")


def _cmd_coeffs(args: argparse.Namespace) -> int:
    if args.order < 0:
        print("error: --order must be nonnegative", file=sys.stderr)
        return 2
    order = _capped(args.order)
    try:
        series = _coeff_target_series(args.target, order)
    except (KeyError, SeriesError) as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    coeffs = series.coeffs
    if args.csv:
        print("n,coefficient")
        for n, c in enumerate(coeffs):
            print(f"{n},{c}")
    elif args.json:
        print(
            json.dumps(
                {
                    "target": args.target,
                    "order": order,
                    "coefficients": [str(c) for c in coeffs],
                },
                indent=2,
            )
        )
    else:
        print(",".join(str(c) for c in coeffs))
    return 0


# ----------------------------------------------------------------------
# enum

def _cmd_enum(args: argparse.Namespace) -> int:
    if args.family not in partitions.FAMILIES:
        print(
            f"error: unknown family {args.family!r}; choose from {', '.join(partitions.FAMILIES)}",
            file=sys.stderr,
        )
        return 2
    budget = _capped(partitions.DEFAULT_ENUMERATION_BUDGET)
    if args.n < 0 or args.n > budget:
        print(f"error: --n must lie in 0..{budget}", file=sys.stderr)
        return 2
    spec = partitions.FAMILIES[args.family]
    unsigned = partitions.count_family(spec, args.n, use_weight=False)
    signed = partitions.count_family(spec, args.n, use_weight=True)
    print(f"family {args.family} n={args.n}")
    print(f"count {unsigned}")
    print(f"weighted {signed}")
    if args.stats:
        x0, x1, x2, x3 = partitions.statistic_counts(spec, args.n)
        name = args.family
        print(f"{name}0={x0} {name}1={x1} {name}2={x2} {name}3={x3}")
    if args.list:
        for partition in partitions.enumerate_family(spec, args.n):
            print(partition.text())
    return 0


# ----------------------------------------------------------------------
# identities

def _cmd_identities(args: argparse.Namespace) -> int:
    cases = registry.list_identities()
    if args.json:
        docs = []
        for c in cases:
            lhs, rhs = registry.describe_sides(c)
            docs.append(
                {
                    "id": c.id,
                    "description": c.description,
                    "source": c.source,
                    "notes": c.notes,
                    "negative_control": c.negative_control,
                    "enumeration_backed": c.enumeration_backed,
                    "default_order": c.default_order,
                    "lhs": lhs,
                    "rhs": rhs,
                }
            )
        print(json.dumps(docs, indent=2))
    else:
        for c in cases:
            marker = "*" if c.negative_control else " "
            print(f"{c.id:<34}{marker} {c.description}")
    return 0


# ----------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qplab",
        description=(
            "Exact q-series laboratory: verify the identity catalog, print "
            "coefficient tables, and explore two-color partition families."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity checks")
    group = p_verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--id", help="verify a single identity by id")
    group.add_argument("--all", action="store_true", help="verify every identity")
    p_verify.add_argument("--order", type=int, default=None, help="truncation order")
    p_verify.add_argument("--json", action="store_true", help="emit JSON reports")
    p_verify.set_defaults(func=_cmd_verify)

    p_coeffs = sub.add_parser("coeffs", help="print coefficient tables")
    p_coeffs.add_argument(
        "--target",
        required=True,
        help=(
            "omega | psi | nu | nu-neg | theta | theta-alt | "
            "family:<name>[:signed] | rational:<expression>"
        ),
    )
    p_coeffs.add_argument("--order", type=int, default=20, help="truncation order")
    fmt = p_coeffs.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="CSV rows n,coefficient")
    fmt.add_argument("--json", action="store_true", help="JSON document")
    p_coeffs.set_defaults(func=_cmd_coeffs)

    p_enum = sub.add_parser("enum", help="count and list family partitions")
    p_enum.add_argument("--family", required=True, help="|".join(partitions.FAMILIES))
    p_enum.add_argument("--n", type=int, required=True, help="the partitioned integer")
    p_enum.add_argument("--list", action="store_true", help="print every partition")
    p_enum.add_argument(
        "--stats", action="store_true", help="split counts by even-part and length parity"
    )
    p_enum.set_defaults(func=_cmd_enum)

    p_ids = sub.add_parser("identities", help="list the identity catalog")
    p_ids.add_argument("--json", action="store_true", help="include recipes and notes")
    p_ids.set_defaults(func=_cmd_identities)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
