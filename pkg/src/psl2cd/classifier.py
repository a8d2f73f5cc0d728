"""Classification of proper extensions of PSL(2,q) under the two-prime
condition.

For each prime power q >= 7 and each group S < H <= Aut(S) the sweep
computes cd(H) exactly, brute-forces the two-prime condition over all
pairs, and matches H against the twelve group families known to be the
only possible survivors (together with their necessary arithmetic
conditions).  The hard assertion runs in one direction only: a group that
passes the brute-force check must match some family whose conditions
hold.  The converse -- a matched family whose group nevertheless fails --
is reported, never assumed absent.

Each family also carries its predicted degree set; the sweep cross-checks
it against the computed one and surfaces any mismatch.  The generic
f-even rows skip this cross-check at q = 9 only, where the explicit
Sym(6) / M10 rows are authoritative (the j = 2 removal trims their
printed sets).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .arithmetic import is_fermat_prime, is_prime, omega, prime_powers_in_range
from .groups import (
    GroupDescriptor,
    OuterKind,
    OuterSubgroup,
    PrimePower,
    character_degrees,
    enumerate_outer_subgroups,
    group_name,
)
from .twoprime import HypothesisReport, check_set

Matcher = Callable[[GroupDescriptor], bool]
Expected = Callable[[GroupDescriptor], tuple[int, ...] | None]


@dataclass(frozen=True)
class TableRow:
    """One surviving group family: shape matcher, necessary arithmetic
    conditions, and the predicted degree set cd(G) \\ {1}."""

    row_id: str
    group_shape: str
    matcher: Matcher
    conditions: Matcher
    expected_degrees: Expected


def _is_untwisted(g: GroupDescriptor, d: int | None = None) -> bool:
    return g.outer.kind is OuterKind.UNTWISTED and (d is None or g.outer.d == d)


def _full_field(g: GroupDescriptor) -> bool:
    return _is_untwisted(g, g.q.f) and g.q.f > 1


def _odd_prime(n: int) -> bool:
    return n % 2 == 1 and is_prime(n)


def _sorted(*values: int) -> tuple[int, ...]:
    return tuple(sorted(values))


def _expected_field_ext(g: GroupDescriptor) -> tuple[int, ...]:
    q, f = g.q.q, g.q.f
    return _sorted(q - 1, q, (q - 1) * f, (q + 1) * f)


def _expected_half(g: GroupDescriptor) -> tuple[int, ...]:
    q = g.q.q
    return _sorted(q, 2 * (q - 1), q + 1, 2 * (q + 1))


_ROWS = (
    TableRow(
        "sym6",
        "Sym(6)",
        matcher=lambda g: g.q.q == 9 and _is_untwisted(g, 2),
        conditions=lambda g: True,
        expected_degrees=lambda g: (5, 9, 10, 16),
    ),
    TableRow(
        "m10",
        "M10",
        matcher=lambda g: g.q.q == 9 and g.outer == OuterSubgroup(OuterKind.TWISTED, 2),
        conditions=lambda g: True,
        expected_degrees=lambda g: (9, 10, 16),
    ),
    TableRow(
        "pgl",
        "PGL(2,q)",
        matcher=lambda g: g.outer == OuterSubgroup(OuterKind.WITH_DIAGONAL, 1),
        conditions=lambda g: True,
        expected_degrees=lambda g: _sorted(g.q.q - 1, g.q.q, g.q.q + 1),
    ),
    TableRow(
        "s_phi_p3",
        "PSL(2,3^f).<phi>",
        matcher=lambda g: g.q.p == 3 and _full_field(g),
        conditions=lambda g: _odd_prime(g.q.f) and omega((g.q.q - 1) // 2) <= 2,
        expected_degrees=lambda g: _sorted(
            (g.q.q - 1) // 2, g.q.q, (g.q.q - 1) * g.q.f, (g.q.q + 1) * g.q.f
        ),
    ),
    TableRow(
        "aut_p3",
        "PGL(2,3^f).<phi>",
        matcher=lambda g: g.q.p == 3
        and g.outer.kind is OuterKind.WITH_DIAGONAL
        and g.outer.d == g.q.f,
        conditions=lambda g: _odd_prime(g.q.f) and omega(g.q.q - 1) == 2,
        expected_degrees=_expected_field_ext,
    ),
    TableRow(
        "s_phi_p2",
        "PSL(2,2^f).<phi>",
        matcher=lambda g: g.q.p == 2 and _full_field(g),
        conditions=lambda g: _odd_prime(g.q.f) and omega(g.q.q - 1) <= 2,
        expected_degrees=_expected_field_ext,
    ),
    TableRow(
        "s_phi_quarter",
        "PSL(2,2^f).<phi^(f/4)>",
        matcher=lambda g: g.q.p == 2 and _is_untwisted(g, 4),
        conditions=lambda g: g.q.q + 1 > 5 and is_fermat_prime(g.q.q + 1),
        expected_degrees=lambda g: _sorted(
            g.q.q, 4 * (g.q.q - 1), g.q.q + 1, 2 * (g.q.q + 1), 4 * (g.q.q + 1)
        ),
    ),
    TableRow(
        "s_phi_half_even",
        "PSL(2,2^f).<phi^(f/2)>",
        matcher=lambda g: g.q.p == 2 and _is_untwisted(g, 2),
        conditions=lambda g: g.q.f % 2 == 0 and omega(g.q.q + 1) <= 2,
        expected_degrees=_expected_half,
    ),
    TableRow(
        "s_phi_half_odd",
        "PSL(2,q).<phi^(f/2)>, q odd",
        matcher=lambda g: g.q.p != 2 and _is_untwisted(g, 2),
        conditions=lambda g: g.q.f % 2 == 0 and omega(g.q.q + 1) <= 2,
        expected_degrees=lambda g: None
        if g.q.q == 9
        else _sorted(
            (g.q.q + 1) // 2, g.q.q, 2 * (g.q.q - 1), g.q.q + 1, 2 * (g.q.q + 1)
        ),
    ),
    TableRow(
        "s_delta_phi_half",
        "PSL(2,q).<delta*phi^(f/2)>",
        matcher=lambda g: g.outer == OuterSubgroup(OuterKind.TWISTED, 2),
        conditions=lambda g: g.q.f % 2 == 0 and omega(g.q.q + 1) <= 2,
        expected_degrees=lambda g: None if g.q.q == 9 else _expected_half(g),
    ),
    TableRow(
        "pgl_phi_half",
        "PGL(2,q).<phi^(f/2)>",
        matcher=lambda g: g.q.p != 2
        and g.outer == OuterSubgroup(OuterKind.WITH_DIAGONAL, 2),
        conditions=lambda g: g.q.f % 2 == 0 and omega(g.q.q + 1) <= 2,
        expected_degrees=_expected_half,
    ),
    TableRow(
        "s_phi_over_m",
        "PSL(2,2^f).<phi^(f/m)>, m an odd prime < f",
        matcher=lambda g: g.q.p == 2
        and g.outer.kind is OuterKind.UNTWISTED
        and g.outer.d < g.q.f
        and _odd_prime(g.outer.d),
        conditions=lambda g: omega(g.q.q - 1) <= 2 and omega(g.q.q + 1) <= 2,
        expected_degrees=lambda g: _sorted(
            g.q.q - 1,
            g.q.q,
            g.outer.d * (g.q.q - 1),
            g.q.q + 1,
            g.outer.d * (g.q.q + 1),
        ),
    ),
)


def table_rows() -> tuple[TableRow, ...]:
    """The twelve group families, in table order."""
    return _ROWS


@dataclass(frozen=True)
class GroupVerdict:
    descriptor: GroupDescriptor
    degrees: tuple[int, ...]
    report: HypothesisReport
    matched_rows: tuple[str, ...]
    degree_mismatches: tuple[str, ...]

    @property
    def brute_pass(self) -> bool:
        return self.report.passed

    @property
    def agree(self) -> bool:
        return not self.brute_pass or bool(self.matched_rows)


def brute_force_verdict(g: GroupDescriptor) -> GroupVerdict:
    """Exact degree set, brute-force pair check, and family matching for H."""
    if g.q.q < 7:
        raise ValueError(f"the classification covers q >= 7, got {g.q.q}")
    if g.is_trivial:
        raise ValueError("outer subgroup must be nontrivial: S < H is required")
    degrees = tuple(character_degrees(g))
    report = check_set(degrees)
    nontrivial = tuple(d for d in degrees if d != 1)
    matched: list[str] = []
    mismatched: list[str] = []
    for row in _ROWS:
        if row.matcher(g) and row.conditions(g):
            matched.append(row.row_id)
            expected = row.expected_degrees(g)
            if expected is not None and tuple(sorted(expected)) != nontrivial:
                mismatched.append(row.row_id)
    return GroupVerdict(g, degrees, report, tuple(matched), tuple(mismatched))


@dataclass(frozen=True)
class SweepReport:
    q_min: int
    q_max: int
    verdicts: tuple[GroupVerdict, ...]
    overflowed: tuple[tuple[GroupDescriptor, str], ...]

    @property
    def disagreements(self) -> tuple[GroupVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.agree)

    @property
    def converse_anomalies(self) -> tuple[GroupVerdict, ...]:
        return tuple(v for v in self.verdicts if v.matched_rows and not v.brute_pass)

    @property
    def degree_mismatched(self) -> tuple[GroupVerdict, ...]:
        return tuple(v for v in self.verdicts if v.degree_mismatches)

    @property
    def passing(self) -> tuple[GroupVerdict, ...]:
        return tuple(v for v in self.verdicts if v.brute_pass)


def _verdicts_for_q(target: tuple[int, int, int]) -> tuple[list[GroupVerdict], list[tuple[GroupDescriptor, str]]]:
    q, p, f = target
    pp = PrimePower(p, f, q)
    verdicts: list[GroupVerdict] = []
    overflowed: list[tuple[GroupDescriptor, str]] = []
    for outer in enumerate_outer_subgroups(pp, include_trivial=False):
        g = GroupDescriptor(pp, outer)
        try:
            verdicts.append(brute_force_verdict(g))
        except OverflowError as exc:  # recorded, not fatal
            overflowed.append((g, str(exc)))
    return verdicts, overflowed


def sweep(q_min: int, q_max: int, jobs: int = 1) -> SweepReport:
    """Verdicts for every prime power in [q_min, q_max] and every proper
    extension, deterministically ordered by (q, kind, d).

    ``jobs`` > 1 fans the per-q work out over worker processes; the result
    is identical to a serial run.
    """
    if q_min < 7:
        raise ValueError(f"sweeps start at q = 7, got q_min = {q_min}")
    if q_max < q_min:
        raise ValueError(f"empty range: q_min = {q_min} > q_max = {q_max}")
    targets = prime_powers_in_range(q_min, q_max)
    if jobs > 1 and len(targets) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunk = max(1, len(targets) // (8 * jobs))
                results = list(pool.map(_verdicts_for_q, targets, chunksize=chunk))
        except (OSError, PermissionError):  # no subprocess support: run serially
            results = [_verdicts_for_q(t) for t in targets]
    else:
        results = [_verdicts_for_q(t) for t in targets]
    verdicts: list[GroupVerdict] = []
    overflowed: list[tuple[GroupDescriptor, str]] = []
    for verdict_chunk, overflow_chunk in results:
        verdicts.extend(verdict_chunk)
        overflowed.extend(overflow_chunk)
    verdicts.sort(key=lambda v: v.descriptor.sort_key())
    overflowed.sort(key=lambda pair: pair[0].sort_key())
    return SweepReport(q_min, q_max, tuple(verdicts), tuple(overflowed))


def verdict_to_dict(v: GroupVerdict) -> dict:
    """JSON-ready shape: {q, group:{kind,d,name}, degrees, pass, violations,
    rows, agree}."""
    return {
        "q": v.descriptor.q.q,
        "group": {
            "kind": v.descriptor.outer.kind.value,
            "d": v.descriptor.outer.d,
            "name": group_name(v.descriptor),
        },
        "degrees": list(v.degrees),
        "pass": v.brute_pass,
        "violations": [
            {"a": w.a, "b": w.b, "gcd": w.gcd, "omega": w.omega}
            for w in v.report.violations
        ],
        "rows": list(v.matched_rows),
        "agree": v.agree,
    }


def sweep_report_to_dict(report: SweepReport) -> dict:
    return {
        "q_min": report.q_min,
        "q_max": report.q_max,
        "verdicts": [verdict_to_dict(v) for v in report.verdicts],
        "degree_mismatches": [
            {"q": v.descriptor.q.q, "group": group_name(v.descriptor), "rows": list(v.degree_mismatches)}
            for v in report.degree_mismatched
        ],
        "overflowed": [
            {"q": g.q.q, "group": group_name(g), "error": message}
            for g, message in report.overflowed
        ],
        "summary": {
            "groups": len(report.verdicts),
            "passing": len(report.passing),
            "disagreements": len(report.disagreements),
            "converse_anomalies": len(report.converse_anomalies),
            "degree_mismatches": len(report.degree_mismatched),
        },
    }
