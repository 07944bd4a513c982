"""Integer factorization and Zsigmondy primitive prime divisors.

Factoring is trial division up to 10**6 followed by Brent's variant of
Pollard rho; inputs are capped at 2**128 so the desk-scale uses (q**n - 1
for single-digit q and n <= 30) factor instantly.
"""

from math import gcd

_TRIAL_BOUND = 10**6
_INPUT_CAP = 1 << 128

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24 (Sorenson-Webster),
# padded with a few more primes for the residual 128-bit headroom.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        a %= n
        if a == 0:
            continue
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


def _pollard_rho(n: int) -> int:
    # Brent's cycle finding; n must be odd, composite, not a prime power issue
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"pollard rho failed on {n}")


def factorize(n: int) -> dict[int, int]:
    """Return the prime factorization of n >= 1 as {prime: multiplicity}."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    if n > _INPUT_CAP:
        raise ValueError("input exceeds the 2**128 factoring cap")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    # wheel over 2,3,5 would be nicer; plain odd steps are fast enough here
    while d * d <= n and d <= _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    if n == 1:
        return dict(sorted(out.items()))
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def multiplicative_order(q: int, p: int) -> int:
    """Order of q modulo the prime p (q not divisible by p)."""
    order = p - 1
    for r, _ in factorize(p - 1).items():
        while order % r == 0 and pow(q, order // r, p) == 1:
            order //= r
    return order


def zsigmondy(q: int, n: int) -> int | None:
    """Smallest primitive prime divisor of q**n - 1, or None.

    A primitive prime divisor divides q**n - 1 but no q**m - 1 with
    1 <= m < n.  Returns None exactly in the Zsigmondy exception cases
    ((q, n) = (2, 6), and n = 2 with q + 1 a power of two).
    """
    if q < 2 or n < 2:
        raise ValueError("zsigmondy requires q >= 2 and n >= 2")
    value = q**n - 1  # factorize() enforces the 2**128 cap
    for p in factorize(value):
        if multiplicative_order(q, p) == n:
            return p
    return None
