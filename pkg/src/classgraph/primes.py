"""Exact integer arithmetic: primality, factoring, multiplicative orders.

Everything here is deterministic.  Primality uses the fixed Miller-Rabin
witness set below, which is exact for all inputs < 3_317_044_064_679_887_385_961_981
(in particular for the full 64-bit range); nothing in this package tests
larger numbers.  Factoring is trial division against a lazily grown prime
table, with Pollard's rho for the cofactors the table cannot reach.
"""

from __future__ import annotations

import math
from collections import Counter

# Exact for n < 3.317e24 (Sorenson-Webster); covers every 64-bit integer.
MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

TRIAL_DIVISION_BOUND = 10**6

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Lazily extended trial-division table; grows geometrically up to
# TRIAL_DIVISION_BOUND the first time a factorization needs it.
_table: list[int] = []
_table_limit: int = 0


def sieve(limit: int) -> list[int]:
    """All primes <= limit, ascending (Eratosthenes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def _ensure_table(limit: int) -> None:
    global _table, _table_limit
    limit = min(limit, TRIAL_DIVISION_BOUND)
    if limit <= _table_limit:
        return
    target = max(1000, _table_limit)
    while target < limit:
        target *= 10
    target = min(target, TRIAL_DIVISION_BOUND)
    _table = sieve(target)
    _table_limit = target


def is_prime(n: int) -> bool:
    """Deterministic primality for 0 <= n (exact below the documented bound)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (deterministic parameter sweep)."""
    for c in range(1, 1000):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> Counter[int]:
    """Prime factorization of n >= 1 as a Counter {prime: exponent}."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: Counter[int] = Counter()
    if n == 1:
        return out
    _ensure_table(min(math.isqrt(n) + 1, TRIAL_DIVISION_BOUND))
    for p in _table:
        if p * p > n:
            break
        while n % p == 0:
            out[p] += 1
            n //= p
    if n == 1:
        return out
    if is_prime(n):
        out[n] += 1
        return out
    # Beyond the table: split recursively with rho.
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] += 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime divisors of n >= 1, ascending."""
    return tuple(sorted(factorize(n)))


def valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n (n >= 1)."""
    if n < 1 or p < 2:
        raise ValueError(f"valuation undefined for n={n}, p={p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in the unit group mod m; requires gcd(a, m) == 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    phi = 1
    for p, e in factorize(m).items():
        phi *= (p - 1) * p ** (e - 1)
    order = phi
    for q in prime_factors(phi):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order
