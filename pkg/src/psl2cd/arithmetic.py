"""Exact natural-number arithmetic for the degree-set classifier.

Deterministic factorization and primality for inputs below 2**63, plus the
special predicates the classification conditions consume: Omega (prime
divisors counted with multiplicity), Zsigmondy primitive prime divisors of
2**n - 1, and Mersenne/Fermat prime tests.

Everything here is a pure function of its arguments; the only shared state
is a read-mostly memo cache on factorization, so concurrent use is safe.
"""

from __future__ import annotations

import functools
import math

MAX_VALUE = 1 << 63
"""Exclusive upper bound for factoring inputs; larger values raise OverflowError."""

Factorization = tuple[tuple[int, int], ...]
"""Prime factorization as ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_BOUND = 1000
_TRIAL_PRIMES = tuple(primes_up_to(_TRIAL_BOUND))
_NEXT_PRIME_SQ = 1009 * 1009  # first prime beyond the table, squared

# The first twelve primes decide primality for every n < 3.3 * 10**24,
# far past the 2**63 working range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact on the whole working range."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factor(n: int) -> Factorization:
    """Prime factorization of n, primes strictly increasing; factor(1) == ().

    Trial division by a fixed prime table, then deterministic Miller-Rabin
    plus Brent's rho with a fixed parameter schedule, so the output (and
    everything downstream of it) is reproducible.

    Raises ValueError for n < 1 and OverflowError for n >= 2**63.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}: positive integer required")
    if n >= MAX_VALUE:
        raise OverflowError(f"{n} is out of range: inputs must be below 2**63")
    return _factor_cached(n)


@functools.lru_cache(maxsize=1 << 15)
def _factor_cached(n: int) -> Factorization:
    out: list[tuple[int, int]] = []
    for p in _TRIAL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if n < _NEXT_PRIME_SQ or is_prime(n):
            out.append((n, 1))
        else:
            counts: dict[int, int] = {}
            _split(n, counts)
            out.extend(sorted(counts.items()))  # all split factors exceed the table
    return tuple(out)


def _split(n: int, counts: dict[int, int]) -> None:
    """Accumulate the prime factors of n (which has no factor <= 1000)."""
    if n == 1:
        return
    if is_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    root = math.isqrt(n)
    if root * root == n:
        _split(root, counts)
        _split(root, counts)
        return
    d = _brent_rho(n)
    _split(d, counts)
    _split(n // d, counts)


def _brent_rho(n: int) -> int:
    """Nontrivial divisor of an odd composite n, by Brent's cycle method.

    The polynomial constants are tried in a fixed order, so the divisor
    found (hence the recursion shape) is deterministic in n.
    """
    for c in range(1, 64):
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"could not split {n}")  # unreachable below 2**63


def omega(n: int) -> int:
    """Number of prime divisors of n counted with multiplicity; omega(1) == 0."""
    if n == 1:
        return 0
    return sum(e for _, e in factor(n))


def omega_at_least(n: int, k: int) -> bool:
    """Decide whether Omega(n) >= k, for n of any size.

    Small primes are stripped first; once the running count plus one prime
    for any nontrivial cofactor settles the bound, no full factorization is
    needed, so this works on values far beyond 2**63.  When the bound
    cannot be settled that way the cofactor is factored exactly, which
    requires it to be in range.
    """
    if n < 1:
        raise ValueError(f"Omega is undefined for {n}")
    count = 0
    for p in _TRIAL_PRIMES:
        while n % p == 0:
            n //= p
            count += 1
        if count >= k:
            return True
        if p * p > n:
            break
    if n > 1 and count + 1 >= k:
        return True
    if n == 1:
        return count >= k
    if n < MAX_VALUE:
        return count + omega(n) >= k
    raise OverflowError(f"cannot settle Omega >= {k} for an out-of-range cofactor")


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factor(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """(p, f) with q == p**f and p prime, or None if q is not a prime power.

    Raises ValueError for q < 2.
    """
    if q < 2:
        raise ValueError(f"{q} has no prime-power decomposition")
    fs = factor(q)
    if len(fs) == 1:
        return fs[0]
    return None


def prime_powers_in_range(lo: int, hi: int) -> list[tuple[int, int, int]]:
    """All prime powers q = p**f with lo <= q <= hi, as (q, p, f) ascending in q."""
    if hi < lo or hi < 2:
        return []
    out = [(p, p, 1) for p in primes_up_to(hi) if p >= lo]
    for p in primes_up_to(math.isqrt(hi)):
        q, f = p * p, 2
        while q <= hi:
            if q >= lo:
                out.append((q, p, f))
            q *= p
            f += 1
    out.sort()
    return out


def zsigmondy_base2(n: int) -> int | None:
    """Smallest prime dividing 2**n - 1 but no 2**k - 1 with 1 <= k < n.

    Such a primitive divisor exists for every n >= 2 except n = 6, where
    63 = 3**2 * 7 has 3 | 2**2 - 1 and 7 | 2**3 - 1.

    Raises ValueError for n < 2 and OverflowError for n > 63.
    """
    if n < 2:
        raise ValueError(f"primitive divisors need n >= 2, got {n}")
    if n > 63:
        raise OverflowError(f"2**{n} - 1 is out of range: inputs must be below 2**63")
    for r, _ in factor((1 << n) - 1):
        if all(pow(2, k, r) != 1 for k in range(1, n)):
            return r
    return None


def is_mersenne_prime(n: int) -> bool:
    """True iff n == 2**k - 1 for some k and n is prime."""
    if n < 3:
        return False
    if (n + 1) & n:
        return False
    return is_prime(n)


def is_fermat_prime(n: int) -> bool:
    """True iff n == 2**(2**k) + 1 for some k >= 0 and n is prime."""
    if n < 3:
        return False
    m = n - 1
    if m & (m - 1):
        return False  # n - 1 must be a power of two ...
    e = m.bit_length() - 1
    if e & (e - 1):
        return False  # ... whose exponent is itself a power of two
    return is_prime(n)
