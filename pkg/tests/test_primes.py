"""Factoring and Zsigmondy primitive prime divisors."""

import pytest

from hclab.laurent import cyclotomic_poly
from hclab.primes import factorize, is_prime, multiplicative_order, zsigmondy


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    for n in range(limit):
        assert is_prime(n) == sieve[n], n


def test_factorize_reconstructs():
    for n in (2, 12, 97, 2**5 * 3**4, 2**31 - 1, 3**20 - 1, 9**30 - 1):
        fac = factorize(n)
        prod = 1
        for p, m in fac.items():
            assert is_prime(p)
            prod *= p**m
        assert prod == n


def test_factorize_cap():
    with pytest.raises(ValueError):
        factorize(1 << 130)


def brute_zsigmondy(q, n):
    """Independent oracle: scan the prime divisors of q**n - 1 directly."""
    value = q**n - 1
    primes = []
    d = 2
    v = value
    while d * d <= v:
        if v % d == 0:
            primes.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        primes.append(v)
    for p in sorted(primes):
        if all((q**m - 1) % p for m in range(1, n)):
            return p
    return None


def test_zsigmondy_spec_examples():
    assert zsigmondy(2, 6) is None  # 63 = 9 * 7, both non-primitive
    assert zsigmondy(2, 5) == 31
    assert zsigmondy(3, 2) is None  # 8 = 2**3 and 2 | 3 - 1


def test_zsigmondy_against_brute_force():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in range(2, 13):
            assert zsigmondy(q, n) == brute_zsigmondy(q, n), (q, n)


def test_zsigmondy_invariants():
    for q in (2, 3, 5, 7):
        for n in (2, 3, 4, 5, 6, 10, 12, 30):
            p = zsigmondy(q, n)
            if p is None:
                continue
            assert p % n == 1, (q, n, p)
            phi_val = cyclotomic_poly(n).evaluate(q)
            assert phi_val % p == 0, (q, n, p)


def test_zsigmondy_preconditions():
    with pytest.raises(ValueError):
        zsigmondy(1, 5)
    with pytest.raises(ValueError):
        zsigmondy(2, 1)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(3, 7) == 6
    assert multiplicative_order(2, 31) == 5
