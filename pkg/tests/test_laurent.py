"""Laurent polynomials, cyclotomic polynomials, and cyclotomic factoring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hclab.laurent import (
    LaurentPolyZ,
    cyclo_factor,
    cyclotomic_poly,
    phi_at_power,
)

# hand-checked small cyclotomic polynomials used as oracles below
PHI = {
    1: (0, (-1, 1)),
    2: (0, (1, 1)),
    3: (0, (1, 1, 1)),
    4: (0, (1, 0, 1)),
    6: (0, (1, -1, 1)),
}


def poly(low, coeffs):
    return LaurentPolyZ(low, coeffs)


def test_cyclotomic_poly_definition_cases():
    assert cyclotomic_poly(1) == poly(0, (-1, 1))  # q - 1
    assert cyclotomic_poly(2) == poly(0, (1, 1))  # q + 1


def test_cyclotomic_poly_12_by_division_oracle():
    # oracle: q^12 - 1 factors as the product of the known proper-divisor
    # polynomials times q^4 - q^2 + 1
    product = poly(0, (1,))
    for d in (1, 2, 3, 4, 6):
        product = product * poly(*PHI[d])
    candidate = poly(0, (1, 0, -1, 0, 1))  # q^4 - q^2 + 1
    assert product * candidate == LaurentPolyZ.q_power_minus_one(12)
    assert cyclotomic_poly(12) == candidate


def test_product_over_divisors_identity_up_to_120():
    for n in range(1, 121):
        product = LaurentPolyZ.constant(1)
        for d in range(1, n + 1):
            if n % d == 0:
                product = product * cyclotomic_poly(d)
        assert product == LaurentPolyZ.q_power_minus_one(n), n


def test_cyclo_factor_paper_products():
    p = cyclotomic_poly(3) * phi_at_power(6, 2)
    f = cyclo_factor(p, 30)
    assert f.factors == ((3, 1), (12, 1))
    assert f.constant == 1 and f.exponent == 0
    assert f.fully_factored()

    p = phi_at_power(3, 4) * phi_at_power(6, 5)
    f = cyclo_factor(p, 30)
    assert f.factors == ((3, 1), (6, 2), (12, 1), (30, 1))
    assert f.fully_factored()


def test_cyclo_factor_q_minus_one():
    f = cyclo_factor(poly(0, (-1, 1)), 5)
    assert f.factors == ((1, 1),)
    assert (f.constant, f.exponent) == (1, 0)


def test_cyclo_factor_unit_extraction():
    p = (2 * cyclotomic_poly(3)).shift(-3)
    f = cyclo_factor(p, 6)
    assert (f.constant, f.exponent) == (2, -3)
    assert f.factors == ((3, 1),)
    assert f.recompose() == p


def test_cyclo_factor_remainder_reported_not_error():
    # q^2 + 2 has no cyclotomic factors
    p = poly(0, (2, 0, 1))
    f = cyclo_factor(p, 30)
    assert f.factors == ()
    assert f.remainder == p
    assert not f.fully_factored()


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 24, 30]),
                  st.integers(1, 4)),
        min_size=1, max_size=3,
    ),
    st.integers(-4, 4),
    st.sampled_from([1, 2, 3]),
)
def test_cyclo_factor_roundtrip_property(pairs, shift, const):
    p = LaurentPolyZ.monomial(const, shift)
    for d, k in pairs:
        if d * k <= 120:
            p = p * phi_at_power(d, k)
    f = cyclo_factor(p, 120)
    assert f.recompose() == p
    assert f.fully_factored()


def test_laurent_eval_examples():
    assert cyclotomic_poly(2).evaluate(3) == 4
    assert cyclotomic_poly(2).shift(-1).evaluate(3) == Fraction(4, 3)
    assert (3 * cyclotomic_poly(6)).evaluate(2) == 9
    assert cyclotomic_poly(3).evaluate(2) == 7  # 9 != 7, the direct comparison


def test_laurent_eval_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        poly(-1, (1,)).evaluate(0)


def test_serialization_roundtrip():
    p = poly(-2, (3, 0, -1, 7))
    assert p.to_json() == {"terms": [[-2, 3], [0, -1], [1, 7]]}
    assert LaurentPolyZ.from_terms([(e, c) for e, c in p.terms()]) == p


def test_exact_division():
    a = cyclotomic_poly(3) * cyclotomic_poly(4) ** 2
    assert a.divide_exact(cyclotomic_poly(4)) == cyclotomic_poly(3) * cyclotomic_poly(4)
    assert a.divide_exact(cyclotomic_poly(5)) is None


def test_phi_at_power_zero_exponent():
    assert phi_at_power(3, 0) == LaurentPolyZ.constant(3)
    assert phi_at_power(6, 0) == LaurentPolyZ.constant(1)


def test_str_formats():
    assert str(cyclotomic_poly(12)) == "q^4 - q^2 + 1"
    assert str(poly(-1, (1, 1))) == "1 + q^-1"
