"""Integer Laurent polynomials in one variable q, and cyclotomic factoring.

LaurentPolyZ is the carrier for Hecke Schur elements and for the products
of cyclotomic polynomials Phi_d(q**k) that certify their distinctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class LaurentPolyZ:
    """Element of Z[q, q**-1], stored as (lowest exponent, coefficient tuple).

    The first and last stored coefficients are nonzero unless the polynomial
    is zero (represented as low=0, coeffs=()).
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int, coeffs):
        cs = list(coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
            low += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            low = 0
        self.low = low
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolyZ":
        return cls(0, ())

    @classmethod
    def constant(cls, c: int) -> "LaurentPolyZ":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c: int, exp: int) -> "LaurentPolyZ":
        return cls(exp, (c,))

    @classmethod
    def q_power_minus_one(cls, n: int) -> "LaurentPolyZ":
        return cls(0, (-1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_terms(cls, terms) -> "LaurentPolyZ":
        """Build from [(exp, coeff), ...] (sparse serialized form)."""
        if not terms:
            return cls.zero()
        lo = min(e for e, _ in terms)
        hi = max(e for e, _ in terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms:
            cs[e - lo] += c
        return cls(lo, cs)

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.low == 0 and self.coeffs == (1,)

    @property
    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def terms(self) -> list[tuple[int, int]]:
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolyZ)
            and self.low == other.low
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.low, self.coeffs))

    # -- arithmetic ---------------------------------------------------

    def __neg__(self):
        return LaurentPolyZ(self.low, tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, LaurentPolyZ):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.degree, other.degree)
        cs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            cs[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.low - lo + i] += c
        return LaurentPolyZ(lo, cs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolyZ(self.low, tuple(other * c for c in self.coeffs))
        if not isinstance(other, LaurentPolyZ):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPolyZ.zero()
        a, b = self.coeffs, other.coeffs
        cs = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    cs[i + j] += ai * bj
        return LaurentPolyZ(self.low + other.low, cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = LaurentPolyZ.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolyZ":
        """Multiply by q**k."""
        return LaurentPolyZ(self.low + k, self.coeffs)

    def substitute_power(self, k: int) -> "LaurentPolyZ":
        """Return p(q**k) for k >= 1."""
        if k < 1:
            raise ValueError("substitute_power needs k >= 1")
        if self.is_zero():
            return self
        cs = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * k] = c
        return LaurentPolyZ(self.low * k, cs)

    def divide_exact(self, other: "LaurentPolyZ") -> "LaurentPolyZ | None":
        """Exact quotient self/other in Z[q, q**-1], or None if not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolyZ.zero()
        # work on plain polynomials, remember the monomial offset
        a = list(self.coeffs)
        b = other.coeffs
        if len(a) < len(b):
            return None
        q = [0] * (len(a) - len(b) + 1)
        lead = b[-1]
        for i in range(len(q) - 1, -1, -1):
            c = a[i + len(b) - 1]
            if c % lead != 0:
                return None
            q[i] = c // lead
            if q[i]:
                for j, bj in enumerate(b):
                    a[i + j] -= q[i] * bj
        if any(a[: len(b) - 1]):
            return None
        return LaurentPolyZ(self.low - other.low, q)

    def content_and_sign(self) -> int:
        """gcd of coefficients, carrying the sign of the leading one."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        if g == 0:
            return 0
        return g if self.coeffs[-1] > 0 else -g

    def evaluate(self, q0) -> Fraction:
        """Exact value at a nonzero rational point."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc * q0**self.low

    # -- presentation -------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in reversed(self.terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self.terms()]}


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> LaurentPolyZ:
    """The n-th cyclotomic polynomial Phi_n(q), monic of degree phi(n).

    Computed by exact division of q**n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    if n == 1:
        return LaurentPolyZ(0, (-1, 1))
    p = LaurentPolyZ.q_power_minus_one(n)
    for d in _divisors(n):
        if d < n:
            q = p.divide_exact(cyclotomic_poly(d))
            assert q is not None, "cyclotomic division is always exact"
            p = q
    return p


def phi_at_power(d: int, e: int) -> LaurentPolyZ:
    """Phi_d(q**e); for e = 0 this is the integer constant Phi_d(1)."""
    if e < 0:
        raise ValueError("phi_at_power needs e >= 0")
    if e == 0:
        value = cyclotomic_poly(d).evaluate(1)
        assert value.denominator == 1
        return LaurentPolyZ.constant(int(value))
    return cyclotomic_poly(d).substitute_power(e)


@dataclass(frozen=True)
class CycloFactorization:
    """p = constant * q**exponent * prod Phi_d(q)**mult * remainder."""

    constant: int
    exponent: int
    factors: tuple[tuple[int, int], ...]  # (d, multiplicity), ascending d
    remainder: LaurentPolyZ

    def recompose(self) -> LaurentPolyZ:
        p = LaurentPolyZ.monomial(self.constant, self.exponent)
        for d, m in self.factors:
            p = p * cyclotomic_poly(d) ** m
        return p * self.remainder

    def fully_factored(self) -> bool:
        return self.remainder.is_one()

    def __str__(self):
        parts = [str(self.constant), f"q^{self.exponent}"]
        parts += [f"Phi_{d}(q)^{m}" for d, m in self.factors]
        out = " * ".join(parts)
        if not self.remainder.is_one():
            out += f" * ({self.remainder})"
        return out

    def phi_string(self) -> str:
        """Compact Phi-product form, e.g. '3*Phi_6(q)' or 'Phi_3(q)*Phi_6(q)^2'."""
        parts = []
        if self.constant != 1:
            parts.append(str(self.constant))
        if self.exponent != 0:
            parts.append(f"q^{self.exponent}")
        for d, m in self.factors:
            parts.append(f"Phi_{d}(q)" + (f"^{m}" if m > 1 else ""))
        if not self.remainder.is_one():
            parts.append(f"({self.remainder})")
        return "*".join(parts) if parts else "1"


def cyclo_factor(p: LaurentPolyZ, max_d: int) -> CycloFactorization:
    """Greedy exact trial division by Phi_d for d = 1..max_d.

    The unit (integer constant and monomial power) is extracted first; the
    remainder carries whatever is left and equals 1 when p is a product of
    cyclotomic polynomials up to index max_d.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    exponent = p.low
    body = LaurentPolyZ(0, p.coeffs)
    constant = body.content_and_sign()
    body = body.divide_exact(LaurentPolyZ.constant(constant))
    factors = []
    for d in range(1, max_d + 1):
        mult = 0
        phi = cyclotomic_poly(d)
        while True:
            q = body.divide_exact(phi)
            if q is None:
                break
            body = q
            mult += 1
        if mult:
            factors.append((d, mult))
    return CycloFactorization(constant, exponent, tuple(factors), body)
