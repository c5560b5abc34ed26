from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classgraph import BoundExhausted, PrimeRequest, find_primes_in_ap
from oracles import sieve_primes


def test_example_mod3():
    req = PrimeRequest(count=2, modulus=3, residue=1)
    assert find_primes_in_ap(req) == [7, 13]


def test_example_exclusion():
    req = PrimeRequest(count=1, modulus=5, residue=1, exclude=frozenset({11}))
    assert find_primes_in_ap(req) == [31]


def test_invariant_rejects_non_coprime():
    with pytest.raises(ValueError):
        PrimeRequest(count=1, modulus=4, residue=2)


def test_invariant_rejects_bad_bound_and_count():
    with pytest.raises(ValueError):
        PrimeRequest(count=0, modulus=3, residue=1)
    with pytest.raises(ValueError):
        PrimeRequest(count=1, modulus=10, residue=1, bound=10)


def test_bound_exhausted_message():
    with pytest.raises(BoundExhausted, match=r"1 \(mod 101\)"):
        find_primes_in_ap(PrimeRequest(count=50, modulus=101, residue=1, bound=200))


def test_small_residue_prime_included():
    assert find_primes_in_ap(PrimeRequest(count=1, modulus=3, residue=2)) == [2]


def test_modulus_one():
    assert find_primes_in_ap(PrimeRequest(count=4, modulus=1, residue=0)) == [2, 3, 5, 7]


def test_against_sieve_oracle():
    primes = sieve_primes(10**6)
    for modulus, residue in [(3, 1), (4, 3), (15, 2), (7, 5), (12, 1)]:
        expected = [p for p in primes if p % modulus == residue][:8]
        got = find_primes_in_ap(
            PrimeRequest(count=8, modulus=modulus, residue=residue, bound=10**6)
        )
        assert got == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.integers(1, 59), st.integers(1, 4))
def test_properties(modulus, residue, count):
    import math

    if math.gcd(residue, modulus) != 1:
        return
    req = PrimeRequest(count=count, modulus=modulus, residue=residue, bound=10**6)
    out = find_primes_in_ap(req)
    assert out == sorted(set(out))
    assert len(out) == count
    for p in out:
        assert p % modulus == residue % modulus
    assert out == find_primes_in_ap(req)  # deterministic
