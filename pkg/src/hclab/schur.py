"""Schur elements for the rank-one and G2 Hecke parameter families,
their cyclotomic factorizations, and Zsigmondy distinctness certificates.

The two one-parameter families hardcoded here are the ones needed for the
q-parameter comparisons: type A1 with parameter q**k, and type G2 with
parameters (q, q**(2k-1)) for k in {1, 2, 5}.  For G2 the two Schur
elements attached to the degree-2 characters phi_{2,b} (b distinguished by
the b-invariant) are

    c_{phi_{2,b}} = 2 q**(1-2k) Phi_3(q**(k+b-2)) Phi_6(q**(k-b+1)),

where Phi_d(q**0) is evaluated to the integer Phi_d(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .laurent import (
    CycloFactorization,
    LaurentPolyZ,
    cyclo_factor,
    cyclotomic_poly,
    phi_at_power,
)
from .primes import zsigmondy

G2_KS = (1, 2, 5)
# index of the cyclotomic factor whose Zsigmondy prime certifies each row
G2_ZSIGMONDY_INDEX = {1: 6, 2: 12, 5: 30}


@dataclass(frozen=True)
class SchurElement:
    label: str
    value: LaurentPolyZ
    family: str  # "A1" or "G2"
    k: int
    b: int | None = None

    def evaluate(self, q0) -> Fraction:
        return self.value.evaluate(q0)

    def __str__(self):
        return f"c[{self.label}] = {self.value}"


def schur_a1(k: int) -> tuple[SchurElement, SchurElement]:
    """Schur elements (c_1, c_eps) for the A1 Hecke algebra with parameter q**k."""
    if k < 1:
        raise InputError("A1 parameter exponent k must be >= 1")
    phi2 = phi_at_power(2, k)
    c1 = SchurElement("1", phi2, "A1", k)
    ceps = SchurElement("eps", phi2.shift(-k), "A1", k)
    return c1, ceps


def schur_g2(k: int, b: int) -> SchurElement:
    """Schur element of phi_{2,b} for the G2 parameters (q, q**(2k-1))."""
    if k not in G2_KS:
        raise InputError(f"G2 parameter k must be one of {G2_KS}")
    if b not in (1, 2):
        raise InputError("b must be 1 or 2")
    value = phi_at_power(3, k + b - 2) * phi_at_power(6, k - b + 1)
    value = (2 * value).shift(1 - 2 * k)
    return SchurElement(f"phi_{{2,{b}}}", value, "G2", k, b)


@dataclass(frozen=True)
class G2Row:
    """One row of the G2 comparison table, with its distinctness certificate."""

    k: int
    lhs: LaurentPolyZ                 # Phi_3(q**(k-1)) * Phi_6(q**k)
    rhs: LaurentPolyZ                 # Phi_3(q**k) * Phi_6(q**(k-1))
    lhs_factored: CycloFactorization
    rhs_factored: CycloFactorization
    zsigmondy_index: int
    eval_at_2: tuple[int, int]

    def certificate_prime(self, q0: int) -> int | None:
        """Zsigmondy witness at q0 >= 3; None at the exceptional q0 = 2."""
        return zsigmondy(q0, self.zsigmondy_index)

    def certify(self, q0: int) -> dict:
        """Check the two sides are unequal at q0, with the witness used."""
        lv = self.lhs.evaluate(q0)
        rv = self.rhs.evaluate(q0)
        out = {"q0": q0, "lhs": lv, "rhs": rv, "unequal": lv != rv}
        if q0 >= 3:
            p = self.certificate_prime(q0)
            out["witness"] = p
            out["divides_lhs"] = lv % p == 0
            out["divides_rhs"] = rv % p == 0
        return out


def g2_row(k: int) -> G2Row:
    """The k-row of the table comparing the two G2 Schur Phi-products."""
    if k not in G2_KS:
        raise InputError(f"G2 parameter k must be one of {G2_KS}")
    lhs = phi_at_power(3, k - 1) * phi_at_power(6, k)
    rhs = phi_at_power(3, k) * phi_at_power(6, k - 1)
    max_d = 6 * k
    return G2Row(
        k=k,
        lhs=lhs,
        rhs=rhs,
        lhs_factored=cyclo_factor(lhs, max_d),
        rhs_factored=cyclo_factor(rhs, max_d),
        zsigmondy_index=G2_ZSIGMONDY_INDEX[k],
        eval_at_2=(int(lhs.evaluate(2)), int(rhs.evaluate(2))),
    )


def g2_table() -> list[G2Row]:
    return [g2_row(k) for k in G2_KS]


def schur_ratio(c_big: SchurElement, c_small: SchurElement, q0) -> Fraction:
    """Exact ratio c_big(q0) / c_small(q0); the q-parameter cross-check."""
    denom = c_small.evaluate(q0)
    if denom == 0:
        raise InputError("Schur element vanishes at the evaluation point")
    return c_big.evaluate(q0) / denom


def g2_table_tsv() -> str:
    """The three-row table in the layout used for reporting."""
    lines = ["#k\tPhi3(q^(k-1))*Phi6(q^k)\tPhi3(q^k)*Phi6(q^(k-1))"]
    for row in g2_table():
        lines.append(
            f"{row.k}\t{row.lhs_factored.phi_string()}\t{row.rhs_factored.phi_string()}"
        )
    return "\n".join(lines)
