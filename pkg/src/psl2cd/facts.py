"""Registry of the standalone number-theoretic facts the classification
arguments lean on, each verified exhaustively over a configurable range.

Facts are data: id, claim text, default range, and a predicate, so new
micro-claims can be registered without touching the verification loop.
Every fact is expected to hold with zero counterexamples; a counterexample
would contradict a step of the classification and is treated as a failure
by the CLI and the acceptance suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .arithmetic import (
    is_fermat_prime,
    is_mersenne_prime,
    is_prime,
    omega,
    omega_at_least,
    prime_powers_in_range,
    zsigmondy_base2,
)


@dataclass(frozen=True)
class Fact:
    fact_id: str
    claim: str
    default_limit: int
    values: Callable[[int], Iterable[int]]
    predicate: Callable[[int], bool]
    range_text: Callable[[int], str]


@dataclass(frozen=True)
class FactReport:
    fact_id: str
    claim: str
    range_tested: str
    counterexamples: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _odd_prime_powers(lo: int, hi: int) -> Iterator[int]:
    return (q for q, p, _ in prime_powers_in_range(lo, hi) if p != 2)


def _prime_or_prime_square(n: int) -> bool:
    if is_prime(n):
        return True
    root = math.isqrt(n)
    return root * root == n and is_prime(root)


def _mersenne_fermat_window(q: int) -> bool:
    return not (is_mersenne_prime(q - 1) and is_fermat_prime(q + 1))


def _omega_split_power4(f: int) -> bool:
    # 4^f - 1 = (2^f - 1)(2^f + 1) with coprime (odd, consecutive-even) halves,
    # so Omega adds; this keeps both factored values below 2**63 for f <= 62.
    return omega((1 << f) - 1) + omega((1 << f) + 1) >= 3


_FACT_LIST = (
    Fact(
        "F1",
        "for odd f > 1: 4 divides 5^f - 1 and Omega(5^f - 1) >= 3",
        40,
        lambda limit: range(3, limit + 1, 2),
        lambda f: (5**f - 1) % 4 == 0 and omega_at_least(5**f - 1, 3),
        lambda limit: f"odd f in [3, {limit}]",
    ),
    Fact(
        "F2",
        "8 divides 3^f - 1 whenever f = 2 (mod 4)",
        40,
        lambda limit: range(2, limit + 1, 4),
        lambda f: pow(3, f, 8) == 1,
        lambda limit: f"f = 2 (mod 4), f in [2, {limit}]",
    ),
    Fact(
        "F3",
        "3 divides 2^f - 1 exactly when f is even",
        40,
        lambda limit: range(1, limit + 1),
        lambda f: (pow(2, f, 3) == 1) == (f % 2 == 0),
        lambda limit: f"f in [1, {limit}]",
    ),
    Fact(
        "F4",
        "Omega(2^f - 1) <= 2 forces f to be a prime or the square of a prime",
        40,
        lambda limit: range(2, limit + 1),
        lambda f: omega((1 << f) - 1) > 2 or _prime_or_prime_square(f),
        lambda limit: f"f in [2, {limit}]",
    ),
    Fact(
        "F5",
        "for q > 5: q - 1 a Mersenne prime and q + 1 a Fermat prime never hold together",
        10**6,
        lambda limit: range(6, limit + 1),
        _mersenne_fermat_window,
        lambda limit: f"q in [6, {limit}]",
    ),
    Fact(
        "F6",
        "Omega(q - eps) >= 3 for odd prime powers q >= 7, where q = eps (mod 4)",
        10**6,
        lambda limit: _odd_prime_powers(7, limit),
        lambda q: omega(q - (1 if q % 4 == 1 else -1)) >= 3,
        lambda limit: f"odd prime powers q in [7, {limit}]",
    ),
    Fact(
        "F7",
        "Omega(4^f - 1) >= 3 for f >= 4",
        40,
        lambda limit: range(4, limit + 1),
        _omega_split_power4,
        lambda limit: f"f in [4, {limit}]",
    ),
    Fact(
        "F8",
        "Omega(q - 1) >= 3 or Omega(q + 1) >= 3 for odd prime powers q >= 13",
        10**6,
        lambda limit: _odd_prime_powers(13, limit),
        lambda q: omega(q - 1) >= 3 or omega(q + 1) >= 3,
        lambda limit: f"odd prime powers q in [13, {limit}]",
    ),
    Fact(
        "F9",
        "2^n - 1 has a primitive prime divisor for every n >= 2 except n = 6",
        40,
        lambda limit: (n for n in range(2, limit + 1) if n != 6),
        lambda n: zsigmondy_base2(n) is not None,
        lambda limit: f"n in [2, {limit}], n != 6",
    ),
)

FACTS: dict[str, Fact] = {fact.fact_id: fact for fact in _FACT_LIST}


def verify_fact(fact_id: str, limit: int | None = None) -> FactReport:
    """Exhaustively check one fact over its range; collects every counterexample."""
    fact = FACTS.get(fact_id)
    if fact is None:
        raise ValueError(f"unknown fact {fact_id!r}; known: {', '.join(FACTS)}")
    bound = fact.default_limit if limit is None else limit
    counterexamples = tuple(v for v in fact.values(bound) if not fact.predicate(v))
    return FactReport(fact.fact_id, fact.claim, fact.range_text(bound), counterexamples)


def verify_all() -> list[FactReport]:
    """Every registered fact at its default range."""
    return [verify_fact(fact_id) for fact_id in FACTS]


def fact_report_to_dict(report: FactReport) -> dict:
    """JSON-ready shape: {fact, anchor, range, holds, counterexamples}."""
    return {
        "fact": report.fact_id,
        "anchor": report.claim,
        "range": report.range_tested,
        "holds": report.holds,
        "counterexamples": list(report.counterexamples),
    }
