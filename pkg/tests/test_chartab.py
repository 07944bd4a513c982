"""Character tables and the class-function calculus."""

import pytest

from hclab.chartab import (
    character_table,
    class_fusion,
    group_conductor,
    induce,
    inflate,
    inner_product,
    inner_product_int,
    regular_character,
    restrict,
    trivial_character,
)
from hclab.corpus import load
from hclab.cyclo import CyclotomicNumber
from hclab.errors import InputError
from hclab.perm import group_from_generators, parse_perm, pinv, pmul


def find_rows(T, predicate):
    return [i for i, row in enumerate(T.rows) if predicate(row)]


def test_s3_degrees():
    T = character_table(load("s3").group)
    assert T.degrees() == [1, 1, 2]


def test_q8_table_spec_example():
    T = character_table(load("q8").group)
    assert T.degrees() == [1, 1, 1, 1, 2]
    two = T.rows[-1]
    assert [v.to_int() for v in two.values] == [2, -2, 0, 0, 0]


def test_gl32_degrees():
    T = character_table(load("gl3_2").group)
    assert T.degrees() == [1, 3, 3, 6, 7, 8]
    assert sum(d * d for d in T.degrees()) == 168


def test_inner_product_basics():
    G = load("s4").group
    T = character_table(G)
    for chi in T.rows:
        assert inner_product_int(chi, chi) == 1
    reg = regular_character(G)
    for chi in T.rows:
        assert inner_product_int(reg, chi) == chi.degree().to_int()


def test_inner_product_group_mismatch():
    a = trivial_character(load("s3").group)
    b = trivial_character(load("s4").group)
    with pytest.raises(InputError):
        inner_product(a, b)


def test_borel_induction_norm_gl23():
    gf = load("gl2_3")
    G = gf.group
    B = G.subgroup([parse_perm(s, G.degree)
                    for s in gf.raw["parabolics"][0]["P"]])
    ind = induce(trivial_character(B), G)
    assert inner_product_int(ind, ind) == 2


def test_induce_spec_examples():
    S3 = load("s3").group
    T = character_table(S3)
    A3 = S3.subgroup([parse_perm("(1 2 3)", 3)])
    ind = induce(trivial_character(A3), S3)
    # 1 + sign
    lin = [r for r in T.rows if r.degree().to_int() == 1]
    assert ind == lin[0] + lin[1] or ind == lin[1] + lin[0]

    TA = character_table(A3)
    nontriv = [r for r in TA.rows
               if not all(v == r.values[0] for v in r.values)][0]
    ind2 = induce(nontriv, S3)
    two = [r for r in T.rows if r.degree().to_int() == 2][0]
    assert ind2.values == two.values

    D8 = load("d8").group
    TD = character_table(D8)
    Z = load("d8").subgroup("Z")
    TZ = character_table(Z)
    faithful = [r for r in TZ.rows
                if not all(v == r.values[0] for v in r.values)][0]
    ind3 = induce(faithful, D8)
    two_d8 = [r for r in TD.rows if r.degree().to_int() == 2][0]
    assert ind3.values == (2 * two_d8).values


def test_restrict_and_frobenius_reciprocity():
    S3 = load("s3").group
    T = character_table(S3)
    A3 = S3.subgroup([parse_perm("(1 2 3)", 3)])
    sign = [r for r in T.rows
            if r.degree().to_int() == 1
            and not all(v == r.values[0] for v in r.values)][0]
    assert restrict(sign, A3) == trivial_character(A3)
    ind = induce(trivial_character(A3), S3)
    for chi in T.rows:
        lhs = inner_product_int(ind, chi)
        rhs = inner_product_int(trivial_character(A3), restrict(chi, A3))
        assert lhs == rhs


def test_frobenius_reciprocity_broadly():
    for name, sub in (("s4", "V4"), ("gl2_3", "SL2"), ("q8", "Z")):
        gf = load(name)
        G, H = gf.group, gf.subgroup(sub)
        TG, TH = character_table(G), character_table(H)
        for chi in TH.rows:
            ind = induce(chi, G)
            for psi in TG.rows:
                assert inner_product(ind, psi) == \
                    inner_product(chi, restrict(psi, H))


def test_inflate_spec_example():
    gf = load("gl2_3")
    G = gf.group
    SL = gf.subgroup("SL2")
    Q, hom = G.quotient(SL)
    TQ = character_table(Q)
    sign = [r for r in TQ.rows
            if not all(v == r.values[0] for v in r.values)][0]
    inflated = inflate(sign, hom)
    TG = character_table(G)
    idx = TG.index_of(inflated)
    assert idx is not None
    assert TG.degrees()[idx] == 1
    assert not all(v == inflated.values[0] for v in inflated.values)


def test_mackey_decomposition_oracle():
    """Res_K Ind_H^G = double-coset sum, checked exactly."""
    S4 = load("s4").group
    H = S4.subgroup([parse_perm("(1 2)", 4), parse_perm("(1 2 3)", 4)])  # S3
    K = S4.subgroup([parse_perm("(1 2 3 4)", 4), parse_perm("(1 3)", 4)])  # D8
    TH = character_table(H)

    helems, kelems = H.elements(), K.elements()
    seen = set()
    reps = []
    for g in S4.elements():
        if g in seen:
            continue
        reps.append(g)
        for k in kelems:
            for h in helems:
                seen.add(pmul(pmul(k, g), h))

    for chi in TH.rows:
        lhs = restrict(induce(chi, S4), K)
        acc = None
        for g in reps:
            Hg = S4.conjugate_subgroup(H, pinv(g))  # g H g^-1
            M = K.intersection(Hg)
            nM = group_conductor(M)
            vals = []
            for rep, _size in M.conjugacy_classes():
                x = pmul(pmul(pinv(g), rep), g)
                vals.append(chi(x).retract(nM) if x in H else None)
            assert all(v is not None for v in vals)
            from hclab.chartab import ClassFunction

            piece = induce(ClassFunction(M, vals), K)
            acc = piece if acc is None else acc + piece
        assert acc.values == lhs.values


def test_induction_transitivity():
    S4 = load("s4").group
    H = S4.subgroup([parse_perm("(1 2)", 4), parse_perm("(1 2 3)", 4)])
    K = H.subgroup([parse_perm("(1 2 3)", 4)])
    TK = character_table(K)
    for chi in TK.rows:
        direct = induce(chi, S4)
        via_H = induce(induce(chi, H), S4)
        assert direct.values == via_H.values


def test_table_row_ordering_contract():
    T = character_table(load("gl2_3").group)
    degs = T.degrees()
    assert degs == sorted(degs)
    for a, b in zip(T.rows, T.rows[1:]):
        if a.degree().to_int() == b.degree().to_int():
            assert a.sort_key() < b.sort_key()


def test_tsv_output_shape():
    T = character_table(load("s3").group)
    lines = T.to_tsv().splitlines()
    assert lines[0].startswith("#")
    assert len(lines) == 1 + len(T.rows)


def test_class_fusion_requires_subgroup():
    S3 = load("s3").group
    S4 = load("s4").group
    with pytest.raises(InputError):
        class_fusion(S4, S3)


def test_trivial_group_table():
    T = character_table(group_from_generators(3, []))
    assert T.degrees() == [1]
    assert len(T.classes) == 1
