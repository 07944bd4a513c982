"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored as rational vectors on the power basis
1, x, ..., x**(phi(n)-1) of Q[x]/(Phi_n), with one conductor per character
table (the group exponent).  Internally a vector is an integer tuple plus a
positive common denominator, which keeps products in integer convolutions.

All values are immutable; arithmetic between different conductors promotes
both operands to the least common multiple.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .laurent import cyclotomic_poly


@lru_cache(maxsize=None)
class _Context:
    """Per-conductor reduction data for Q[x]/(Phi_n)."""

    def __init__(self, n: int):
        self.n = n
        mod = cyclotomic_poly(n)
        self.phi = mod.degree
        self.modulus = mod.coeffs  # monic, length phi+1
        # x**k mod Phi_n for 0 <= k <= max(2*phi-2, 2n), as integer tuples
        top = -1  # negated lower part of the monic modulus: x**phi = sum
        lower = tuple(top * c for c in self.modulus[:-1])
        powers = []
        cur = [0] * self.phi
        if self.phi:
            cur[0] = 1
        powers.append(tuple(cur))
        kmax = max(2 * self.phi - 2, 2 * n)
        for _ in range(kmax):
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for i, c in enumerate(lower):
                    cur[i] += carry * c
            powers.append(tuple(cur))
        self.powers = powers

    def reduce(self, vec: list[int]) -> tuple[int, ...]:
        """Reduce an integer coefficient vector of any length mod Phi_n."""
        phi = self.phi
        v = list(vec)
        for k in range(len(v) - 1, phi - 1, -1):
            c = v[k]
            if c:
                row = self.powers[k]
                for i in range(phi):
                    v[i] += c * row[i]
            v.pop()
        while len(v) < phi:
            v.append(0)
        return tuple(v)


class CyclotomicNumber:
    """An exact element of Q(zeta_n)."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1, _normalized: bool = False):
        self.n = n
        if _normalized:
            self.num = num
            self.den = den
            return
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, abs(c))
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CyclotomicNumber":
        return cls(n, (0,) * _Context(n).phi, 1, _normalized=True)

    @classmethod
    def one(cls, n: int) -> "CyclotomicNumber":
        return cls.from_rational(1, n)

    @classmethod
    def from_rational(cls, value, n: int = 1) -> "CyclotomicNumber":
        value = Fraction(value)
        phi = _Context(n).phi
        num = [0] * phi
        num[0] = value.numerator
        return cls(n, num, value.denominator)

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        """zeta_n**k."""
        ctx = _Context(n)
        return cls(n, ctx.powers[k % n], 1)

    @classmethod
    def from_root_multiplicities(cls, n: int, e: int, mults) -> "CyclotomicNumber":
        """sum_j mults[j] * zeta_e**j, embedded in Q(zeta_n); requires e | n."""
        if n % e:
            raise ValueError("embedding requires e | n")
        ctx = _Context(n)
        step = n // e
        acc = [0] * ctx.phi
        for j, m in enumerate(mults):
            if m:
                row = ctx.powers[(j * step) % n]
                for i in range(ctx.phi):
                    acc[i] += m * row[i]
        return cls(n, acc, 1)

    # -- alignment and conversion --------------------------------------

    def promote(self, m: int) -> "CyclotomicNumber":
        """Re-express in Q(zeta_m) for n | m (zeta_n -> zeta_m**(m/n))."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("promote target must be a multiple of the conductor")
        ctx = _Context(m)
        step = m // self.n
        acc = [0] * ctx.phi
        for i, c in enumerate(self.num):
            if c:
                row = ctx.powers[(i * step) % m]
                for k in range(ctx.phi):
                    acc[k] += c * row[k]
        return CyclotomicNumber(m, acc, self.den)

    def retract(self, m: int) -> "CyclotomicNumber":
        """Re-express in Q(zeta_m); raises ValueError if the value is not there."""
        if m == self.n:
            return self
        t = lcm(self.n, m)
        big = self.promote(t)
        if big.is_rational_fast():
            return CyclotomicNumber.from_rational(
                Fraction(big.num[0], big.den), m
            )
        sol = _subfield_solve(t, m, big.num)
        if sol is None:
            raise ValueError(f"value does not lie in Q(zeta_{m})")
        fracs = [c / big.den for c in sol]
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        return CyclotomicNumber(m, [int(f * den) for f in fracs], den)

    def is_rational_fast(self) -> bool:
        return not any(self.num[1:])

    @staticmethod
    def align(a: "CyclotomicNumber", b: "CyclotomicNumber"):
        if a.n == b.n:
            return a, b
        m = lcm(a.n, b.n)
        return a.promote(m), b.promote(m)

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.is_rational_fast()

    def to_fraction(self) -> Fraction:
        if not self.is_rational_fast():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_int(self) -> int:
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def __eq__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.align(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational_fast():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    def sort_key(self):
        """Deterministic comparison key (conductor, then rational coordinates)."""
        return (self.n, tuple(Fraction(c, self.den) for c in self.num))

    # -- arithmetic -----------------------------------------------------

    def __neg__(self):
        return CyclotomicNumber(
            self.n, tuple(-c for c in self.num), self.den, _normalized=True
        )

    def __add__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.align(self, other)
        da, db = a.den, b.den
        num = [x * db + y * da for x, y in zip(a.num, b.num)]
        return CyclotomicNumber(a.n, num, da * db)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        a, b = CyclotomicNumber.align(self, other)
        ctx = _Context(a.n)
        x, y = a.num, b.num
        conv = [0] * (2 * ctx.phi - 1 if ctx.phi else 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        conv[i + j] += xi * yj
        return CyclotomicNumber(a.n, ctx.reduce(conv), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational_fast():
            return CyclotomicNumber.from_rational(1 / self.to_fraction(), self.n)
        ctx = _Context(self.n)
        a = [Fraction(c) for c in ctx.modulus]
        b = [Fraction(c, self.den) for c in self.num]
        # extended gcd in Q[x]: s*a + t*b = g with g constant (Phi_n irreducible)
        s0, s1 = [Fraction(1)], [Fraction(0)]
        t0, t1 = [Fraction(0)], [Fraction(1)]
        while any(b):
            q, r = _poly_divmod(a, b)
            a, b = b, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
        g = a
        deg = _poly_degree(g)
        if deg != 0:
            raise ArithmeticError("Phi_n not coprime to a nonzero element")
        inv = [c / g[0] for c in t0]
        inv += [Fraction(0)] * (ctx.phi - len(inv))
        den = 1
        for c in inv[: ctx.phi]:
            den = lcm(den, c.denominator)
        num = [int(c * den) for c in inv[: ctx.phi]]
        return CyclotomicNumber(self.n, ctx.reduce(num), den)

    def __truediv__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other, self.n) * self.inverse()

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation zeta_n -> zeta_n**-1."""
        ctx = _Context(self.n)
        acc = [0] * ctx.phi
        for i, c in enumerate(self.num):
            if c:
                row = ctx.powers[(-i) % self.n] if self.n > 1 else ctx.powers[0]
                for k in range(ctx.phi):
                    acc[k] += c * row[k]
        return CyclotomicNumber(self.n, acc, self.den)

    # -- presentation ---------------------------------------------------

    def __str__(self):
        if self.is_rational_fast():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            f = Fraction(c, self.den)
            mag = abs(f)
            if i == 0:
                body = str(mag)
            else:
                z = f"z{self.n}" if i == 1 else f"z{self.n}^{i}"
                body = z if mag == 1 else f"{mag}*{z}"
            parts.append(("-" if f < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f"{sign}{body}"
        return out

    __repr__ = __str__


def _coerce(value, n: int):
    if isinstance(value, CyclotomicNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return CyclotomicNumber.from_rational(value, n)
    return NotImplemented


# -- small dense polynomial helpers over Fraction (used by inverse/retract) --


def _poly_degree(p) -> int:
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    db = _poly_degree(b)
    if db < 0:
        raise ZeroDivisionError
    r = list(a) + [Fraction(0)]
    q = [Fraction(0)] * max(len(a) - db, 1)
    lead = b[db]
    for i in range(_poly_degree(r) - db, -1, -1):
        c = r[i + db] / lead
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    return q, r[: max(db, 1)] + [Fraction(0)]


@lru_cache(maxsize=None)
def _subfield_basis(t: int, m: int):
    """Coordinates of zeta_m**j (j < phi(m)) inside Q(zeta_t); requires m | t."""
    ctx = _Context(t)
    phim = _Context(m).phi
    step = t // m
    return [ctx.powers[(j * step) % t] for j in range(phim)]


def _subfield_solve(t: int, m: int, target) -> list[Fraction] | None:
    """Solve sum_j c_j * zeta_m**j = target inside Q(zeta_t), or None.

    The target is an integer coordinate vector on the power basis of
    Q(zeta_t); the returned c_j are Fractions.
    """
    basis = _subfield_basis(t, m)
    phit = _Context(t).phi
    rows = [
        [Fraction(basis[j][i]) for j in range(len(basis))] + [Fraction(target[i])]
        for i in range(phit)
    ]
    ncols = len(basis)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, phit) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(phit):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    for i in range(r, phit):
        if rows[i][-1]:
            return None
    return sol
