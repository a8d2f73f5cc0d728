"""The two-prime condition on degree sets.

A set of character degrees satisfies the condition when every pair of
distinct members a != b has gcd(a, b) divisible by at most two primes
counted with multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .arithmetic import omega


@dataclass(frozen=True)
class Violation:
    """A pair a < b whose gcd carries at least three prime divisors."""

    a: int
    b: int
    gcd: int
    omega: int


@dataclass(frozen=True)
class HypothesisReport:
    passed: bool
    violations: tuple[Violation, ...]


def check_pair(a: int, b: int) -> Violation | None:
    """Violation for the pair, or None when Omega(gcd(a, b)) <= 2."""
    if a == b:
        raise ValueError(f"pair members must be distinct, got {a} twice")
    if a < 1 or b < 1:
        raise ValueError("degrees are positive integers")
    if a > b:
        a, b = b, a
    g = math.gcd(a, b)
    om = omega(g)
    if om >= 3:
        return Violation(a, b, g, om)
    return None


def check_set(degrees: Iterable[int]) -> HypothesisReport:
    """Test every unordered pair; all violations reported, sorted by (a, b).

    The degree 1 is harmless (its gcd with anything is 1) and may stay in
    the set.  Duplicates are rejected.
    """
    values = sorted(degrees)
    if any(x == y for x, y in zip(values, values[1:])):
        raise ValueError("degree sets must not contain duplicates")
    violations = []
    for i, a in enumerate(values):
        for b in values[i + 1 :]:
            violation = check_pair(a, b)
            if violation is not None:
                violations.append(violation)
    return HypothesisReport(not violations, tuple(violations))
