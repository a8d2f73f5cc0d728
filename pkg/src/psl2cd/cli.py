"""Command-line front end.

Exit codes: 0 = success and every checked claim holds; 1 = a verified
claim failed (two-prime violation, sweep disagreement, degree mismatch,
or a fact counterexample); 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arithmetic import factor, omega
from .classifier import (
    brute_force_verdict,
    sweep,
    sweep_report_to_dict,
    verdict_to_dict,
)
from .facts import FACTS, fact_report_to_dict, verify_all, verify_fact
from .groups import (
    GroupDescriptor,
    OuterExpressionError,
    PrimePower,
    character_degrees,
    group_name,
    parse_outer,
)
from .maximals import maximal_subgroups, pgl_maximals_special, pgl2_order, psl2_order
from .twoprime import check_set


def to_json(payload: object) -> str:
    """Canonical JSON: sorted keys, two-space indent, integers only.

    Parsing the output and re-serializing it through this function is
    byte-identical.
    """
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(to_json(payload))
    else:
        for line in text_lines:
            print(line)


def _descriptor(args: argparse.Namespace) -> GroupDescriptor:
    pp = PrimePower.from_value(args.q)
    outer = parse_outer(args.outer or "", pp)
    return GroupDescriptor(pp, outer)


def _format_factorization(fs: tuple[tuple[int, int], ...]) -> str:
    if not fs:
        return "1"
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fs)


def _cmd_factor(args: argparse.Namespace) -> int:
    fs = factor(args.n)
    payload = {"n": args.n, "factors": [[p, e] for p, e in fs], "omega": sum(e for _, e in fs)}
    _emit(args, payload, [f"{args.n} = {_format_factorization(fs)}"])
    return 0


def _cmd_omega(args: argparse.Namespace) -> int:
    value = omega(args.n)
    _emit(args, {"n": args.n, "omega": value}, [f"omega({args.n}) = {value}"])
    return 0


def _cmd_cd(args: argparse.Namespace) -> int:
    g = _descriptor(args)
    degrees = character_degrees(g)
    payload = {
        "q": g.q.q,
        "group": {"kind": g.outer.kind.value, "d": g.outer.d, "name": group_name(g)},
        "degrees": degrees,
    }
    text = [
        f"group: {group_name(g)}",
        f"degrees: {', '.join(map(str, degrees))}",
    ]
    _emit(args, payload, text)
    return 0


def _parse_degree_list(raw: str) -> list[int]:
    try:
        values = [int(piece) for piece in raw.split(",") if piece.strip()]
    except ValueError as exc:
        raise ValueError(f"bad degree list {raw!r}: {exc}") from None
    if not values:
        raise ValueError("empty degree list")
    return values


def _cmd_check(args: argparse.Namespace) -> int:
    degrees = sorted(_parse_degree_list(args.degrees))
    report = check_set(degrees)
    payload = {
        "degrees": degrees,
        "pass": report.passed,
        "violations": [
            {"a": v.a, "b": v.b, "gcd": v.gcd, "omega": v.omega}
            for v in report.violations
        ],
    }
    text = [f"degrees: {', '.join(map(str, degrees))}"]
    if report.passed:
        text.append("two-prime condition: PASS")
    else:
        text.append(f"two-prime condition: FAIL ({len(report.violations)} violation(s))")
        text.extend(
            f"  ({v.a}, {v.b}): gcd = {v.gcd}, omega = {v.omega}"
            for v in report.violations
        )
    _emit(args, payload, text)
    return 0 if report.passed else 1


def _cmd_maximals(args: argparse.Namespace) -> int:
    if args.pgl:
        entries = pgl_maximals_special(args.q)
        name, order = f"PGL(2,{args.q})", pgl2_order(args.q)
    else:
        pp = PrimePower.from_value(args.q)
        entries = maximal_subgroups(pp)
        name, order = f"PSL(2,{args.q})", psl2_order(pp)
    payload = {
        "q": args.q,
        "group": name,
        "group_order": order,
        "entries": [
            {
                "structure": e.structure,
                "family": e.family,
                "order": e.order,
                "index": e.index,
                "omega_index": e.omega_index,
            }
            for e in entries
        ],
    }
    text = [f"maximal subgroups of {name} (order {order}):"]
    text.extend(
        f"  {e.structure:<14} order = {e.order:<10} index = {e.index:<10} omega(index) = {e.omega_index}"
        for e in entries
    )
    _emit(args, payload, text)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _descriptor(args)
    if g.is_trivial:
        raise ValueError("classification needs a proper extension: pass --outer")
    verdict = brute_force_verdict(g)
    payload = verdict_to_dict(verdict)
    text = [
        f"group: {group_name(g)}  (q = {g.q.q}, kind = {g.outer.kind.value}, d = {g.outer.d})",
        f"degrees: {', '.join(map(str, verdict.degrees))}",
        f"two-prime condition: {'PASS' if verdict.brute_pass else 'FAIL'}",
    ]
    text.extend(
        f"  violation ({v.a}, {v.b}): gcd = {v.gcd}, omega = {v.omega}"
        for v in verdict.report.violations
    )
    text.append(f"rows matched: {', '.join(verdict.matched_rows) or '(none)'}")
    text.append(f"agree: {'yes' if verdict.agree else 'NO'}")
    _emit(args, payload, text)
    return 0 if verdict.agree and not verdict.degree_mismatches else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep(args.qmin, args.qmax, jobs=args.jobs)
    payload = sweep_report_to_dict(report)
    summary = payload["summary"]
    text = [
        f"sweep q in [{report.q_min}, {report.q_max}]: {summary['groups']} groups",
        "passing: {passing}   disagreements: {disagreements}   "
        "converse anomalies: {converse_anomalies}   degree mismatches: {degree_mismatches}".format(**summary),
    ]
    for verdict in report.disagreements:
        text.append(f"  DISAGREEMENT: {group_name(verdict.descriptor)} passes but matches no row")
    for verdict in report.degree_mismatched:
        text.append(
            f"  DEGREE MISMATCH: {group_name(verdict.descriptor)} rows {', '.join(verdict.degree_mismatches)}"
        )
    for g, message in report.overflowed:
        text.append(f"  OVERFLOW: {group_name(g)}: {message}")
    _emit(args, payload, text)
    failed = report.disagreements or report.degree_mismatched
    return 1 if failed else 0


def _cmd_facts(args: argparse.Namespace) -> int:
    if args.limit is not None and args.fact is None:
        raise ValueError("--limit needs --fact (defaults differ per fact)")
    reports = [verify_fact(args.fact, args.limit)] if args.fact else verify_all()
    payload = {"facts": [fact_report_to_dict(r) for r in reports]}
    text = []
    for r in reports:
        status = "PASS" if r.holds else "FAIL"
        text.append(f"{r.fact_id} {status}  ({r.range_tested})  {r.claim}")
        if not r.holds:
            text.append(f"  counterexamples: {', '.join(map(str, r.counterexamples))}")
    _emit(args, payload, text)
    return 0 if all(r.holds for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psl2cd",
        description="Degree sets of almost simple groups with socle PSL(2,q) "
        "and the two-prime condition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("factor", _cmd_factor, "prime factorization of n")
    p.add_argument("--n", type=int, required=True)

    p = add("omega", _cmd_omega, "prime divisors of n counted with multiplicity")
    p.add_argument("--n", type=int, required=True)

    p = add("cd", _cmd_cd, "character degrees of PSL(2,q) extended by --outer")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--outer", default="", help='generators, e.g. "delta,phi^1" (empty: S itself)')

    p = add("check", _cmd_check, "two-prime condition on a comma-separated degree list")
    p.add_argument("--degrees", required=True)

    p = add("maximals", _cmd_maximals, "maximal subgroup catalog for PSL(2,q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--pgl", action="store_true", help="PGL(2,q) specials (q = 7 or 11)")

    p = add("classify", _cmd_classify, "verdict and row matching for one group")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--outer", required=True)

    p = add("sweep", _cmd_sweep, "classification sweep over a range of prime powers")
    p.add_argument("--qmin", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("facts", _cmd_facts, "verify the registered number-theoretic facts")
    p.add_argument("--fact", choices=sorted(FACTS), default=None)
    p.add_argument("--limit", type=int, default=None)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except OuterExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
