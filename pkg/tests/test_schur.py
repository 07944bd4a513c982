"""Schur elements, the G2 comparison table, and ratio cross-checks."""

from fractions import Fraction

import pytest

from hclab.errors import InputError
from hclab.laurent import LaurentPolyZ, cyclotomic_poly
from hclab.schur import (
    G2_KS,
    g2_row,
    g2_table,
    g2_table_tsv,
    schur_a1,
    schur_g2,
    schur_ratio,
)


def test_a1_formulas():
    c1, ceps = schur_a1(1)
    assert c1.value == LaurentPolyZ(0, (1, 1))  # q + 1
    assert ceps.value == LaurentPolyZ(-1, (1, 1))  # q^-1 (q + 1)
    c1, ceps = schur_a1(2)
    assert c1.value == LaurentPolyZ(0, (1, 0, 1))
    assert ceps.value == LaurentPolyZ(-2, (1, 0, 1))


def test_a1_ratio_is_q_to_k():
    for k in (1, 2, 3, 5):
        c1, ceps = schur_a1(k)
        for q0 in (2, 3, 7):
            assert schur_ratio(c1, ceps, q0) == Fraction(q0) ** k


def test_g2_schur_elements_paper_rows():
    phi = cyclotomic_poly
    # k = 1: common prefactor 2 q^-1, then 3*Phi6 and Phi3
    assert schur_g2(1, 1).value == (2 * (3 * phi(6))).shift(-1)
    assert schur_g2(1, 2).value == (2 * phi(3)).shift(-1)
    # k = 2
    assert schur_g2(2, 1).value == (2 * (phi(3) * phi(12))).shift(-3)
    assert schur_g2(2, 2).value == (2 * (phi(3) * phi(6) ** 2)).shift(-3)
    # k = 5
    assert schur_g2(5, 1).value == \
        (2 * (phi(3) * phi(6) ** 2 * phi(12) * phi(30))).shift(-9)
    assert schur_g2(5, 2).value == \
        (2 * (phi(3) * phi(15) * phi(24))).shift(-9)


def test_g2_rows_match_table():
    tsv = g2_table_tsv().splitlines()
    assert tsv[0].startswith("#")
    assert tsv[1] == "1\t3*Phi_6(q)\tPhi_3(q)"
    assert tsv[2] == "2\tPhi_3(q)*Phi_12(q)\tPhi_3(q)*Phi_6(q)^2"
    assert tsv[3] == ("5\tPhi_3(q)*Phi_6(q)^2*Phi_12(q)*Phi_30(q)"
                      "\tPhi_3(q)*Phi_15(q)*Phi_24(q)")


def test_g2_row_direct_evaluation_at_2():
    row = g2_row(2)
    assert row.eval_at_2 == (91, 63)
    assert g2_row(1).eval_at_2 == (9, 7)


def test_schur_distinct_as_polynomials_and_values():
    for k in G2_KS:
        a, b = schur_g2(k, 1), schur_g2(k, 2)
        assert a.value != b.value
        for q0 in (2, 3, 4, 5, 7, 8, 9):
            assert a.evaluate(q0) != b.evaluate(q0)


def test_zsigmondy_certificates():
    for k, index in ((1, 6), (2, 12), (5, 30)):
        row = g2_row(k)
        assert row.zsigmondy_index == index
        for q0 in (3, 4, 5, 7, 8, 9):
            cert = row.certify(q0)
            assert cert["unequal"]
            assert cert["divides_lhs"] and not cert["divides_rhs"]


def test_schur_positivity_invariant():
    for k in G2_KS:
        for b in (1, 2):
            c = schur_g2(k, b)
            for q0 in (2, 3, 5, 9):
                assert c.evaluate(q0) > 0
    for k in (1, 2, 4):
        for c in schur_a1(k):
            assert c.evaluate(2) > 0


def test_identical_inputs_ratio_one():
    c = schur_g2(1, 1)
    assert schur_ratio(c, c, 5) == 1


def test_parameter_validation():
    with pytest.raises(InputError):
        schur_g2(3, 1)
    with pytest.raises(InputError):
        schur_g2(1, 0)
    with pytest.raises(InputError):
        schur_a1(0)
