"""Clifford theory: decompositions, regular sums, gluing, wreath extensions."""

import random

import pytest

from hclab.chartab import (
    character_table,
    group_conductor,
    inner_product_int,
    restrict,
)
from hclab.clifford import (
    clifford_decomposition,
    extension_gluing,
    regular_sum_check,
    wreath_extension,
)
from hclab.corpus import load
from hclab.cyclo import CyclotomicNumber
from hclab.errors import HypothesisViolation, InputError
from hclab.perm import (
    PermGroup,
    group_from_generators,
    identity_perm,
    parse_perm,
    pconj,
    pmul,
)


def nontrivial(T):
    return [r for r in T.rows if not all(v == r.values[0] for v in r.values)]


def trivial_row(T):
    return [r for r in T.rows if all(v == r.values[0] for v in r.values)][0]


def test_s3_over_c3():
    gf = load("s3")
    M, N = gf.group, gf.subgroup("C3")
    theta = nontrivial(character_table(N))[0]
    rep = clifford_decomposition(M, N, theta)
    assert len(rep.orbit_indices) == 2
    assert rep.inertia.order == 3
    assert rep.omega.order == 1
    assert rep.label_dims == [1]
    TM = character_table(M)
    assert [TM.degrees()[i] for i in rep.above_indices] == [2]


def test_d8_over_center_faithful():
    gf = load("d8")
    M, N = gf.group, gf.subgroup("Z")
    theta = nontrivial(character_table(N))[0]
    rep = clifford_decomposition(M, N, theta)
    assert rep.inertia.order == 8
    assert rep.omega.order == 4 and rep.omega.is_abelian()
    assert not rep.extendable
    assert rep.label_dims == [2]


def test_s4_over_v4():
    gf = load("s4")
    M, N = gf.group, gf.subgroup("V4")
    theta = nontrivial(character_table(N))[0]
    rep = clifford_decomposition(M, N, theta)
    assert len(rep.orbit_indices) == 3
    assert rep.inertia.order == 8
    assert rep.extendable and len(rep.extension_indices) == 2
    TM = character_table(M)
    assert sorted(TM.degrees()[i] for i in rep.above_indices) == [3, 3]
    assert rep.label_dims == [1, 1]


def test_orbit_stabilizer_invariant():
    for name, sub in (("s3", "C3"), ("s4", "V4"), ("q8", "Z"),
                      ("gl2_3", "SL2"), ("s3_wr_c2", "S3xS3")):
        gf = load(name)
        M, N = gf.group, gf.subgroup(sub)
        for theta in character_table(N).rows:
            rep = clifford_decomposition(M, N, theta)
            assert len(rep.orbit_indices) * rep.inertia.order == M.order


def test_regular_sum_examples():
    gf = load("s3")
    M, N = gf.group, gf.subgroup("C3")
    theta = nontrivial(character_table(N))[0]
    common = regular_sum_check(M, N, theta)
    assert common.degree().to_int() == 2

    gf = load("d8")
    M, N = gf.group, gf.subgroup("Z")
    theta = nontrivial(character_table(N))[0]
    common = regular_sum_check(M, N, theta)
    assert common.degree().to_int() == 4  # 2 * (2-dim)

    gf = load("a4")
    M, N = gf.group, gf.subgroup("V4")
    theta = nontrivial(character_table(N))[0]
    common = regular_sum_check(M, N, theta)
    TM = character_table(M)
    assert TM.index_of(common) is not None  # the 3-dim irreducible
    assert common.degree().to_int() == 3


def test_gallagher_counts_when_extendable():
    gf = load("gl2_3")
    M, N = gf.group, gf.subgroup("SL2")
    TN = character_table(N)
    for theta in TN.rows:
        rep = clifford_decomposition(M, N, theta)
        if rep.extendable and rep.omega_abelian:
            assert len(rep.above_indices) == rep.omega.order
            assert rep.gallagher is not None
            assert len({row for _eta, row in rep.gallagher}) == rep.omega.order


def test_gluing_direct_product_case():
    I = group_from_generators(7, ["(1 2 3)", "(4 5)", "(6 7)"])
    N = I.subgroup([parse_perm("(1 2 3)", 7)])
    IG = I.subgroup([parse_perm("(1 2 3)", 7), parse_perm("(4 5)", 7)])
    IP = I.subgroup([parse_perm("(1 2 3)", 7), parse_perm("(6 7)", 7)])
    theta = nontrivial(character_table(N))[0]
    a, b = parse_perm("(4 5)", 7), parse_perm("(6 7)", 7)
    uG = [r for r in character_table(IG).rows
          if restrict(r, N) == theta and r(a) == r(identity_perm(7))][0]
    uP = [r for r in character_table(IP).rows
          if restrict(r, N) == theta and r(b) == r(identity_perm(7))][0]
    chi = extension_gluing(I, N, theta, IG, IP, uG, uP)
    assert chi.degree().to_int() == 1
    assert restrict(chi, N) == theta
    assert restrict(chi, IG) == uG and restrict(chi, IP) == uP


def test_gluing_rejects_non_extendable():
    gf = load("d8")
    D8, Z = gf.group, gf.subgroup("Z")
    theta = nontrivial(character_table(Z))[0]
    IG = D8.subgroup([parse_perm("(1 3)(2 4)", 4), parse_perm("(1 3)", 4)])
    IP = D8.subgroup([parse_perm("(1 3)(2 4)", 4), parse_perm("(1 2)(3 4)", 4)])
    uG = [r for r in character_table(IG).rows if restrict(r, Z) == theta][0]
    uP = [r for r in character_table(IP).rows if restrict(r, Z) == theta][0]
    with pytest.raises(HypothesisViolation):
        extension_gluing(D8, Z, theta, IG, IP, uG, uP)


def test_gluing_uniqueness_distinct_inputs():
    I = group_from_generators(6, ["(1 2 3 4)", "(2 4)", "(5 6)"])
    assert I.order == 16
    N = I.subgroup([parse_perm("(1 2 3 4)", 6)])
    IG = I.subgroup([parse_perm("(1 2 3 4)", 6), parse_perm("(2 4)", 6)])
    IP = I.subgroup([parse_perm("(1 2 3 4)", 6), parse_perm("(5 6)", 6)])
    r4 = parse_perm("(1 2 3 4)", 6)
    TN = character_table(N)
    theta = [r for r in TN.rows
             if r(r4) == -1 and r(pmul(r4, r4)) == 1][0]
    uGs = [r for r in character_table(IG).rows if restrict(r, N) == theta
           and all(r.conjugate_by(x) == r for x in IP.generators)]
    uPs = [r for r in character_table(IP).rows if restrict(r, N) == theta]
    outputs = set()
    for uG in uGs:
        for uP in uPs:
            chi = extension_gluing(I, N, theta, IG, IP, uG, uP)
            outputs.add(chi.values)
    assert len(outputs) == len(uGs) * len(uPs) >= 2


def test_wreath_m1_is_theta():
    S3 = load("s3").group
    theta = character_table(S3).rows[-1]
    W, chi, _val = wreath_extension(S3, theta, 1)
    assert W.order == 6
    assert chi.degree().to_int() == 2
    assert inner_product_int(chi, chi) == 1


def test_wreath_c2_sign_matches_d8():
    C2 = PermGroup(2, [(1, 0)])
    sign = nontrivial(character_table(C2))[0]
    W, chi, val = wreath_extension(C2, sign, 2)
    assert W.order == 8
    assert chi.degree().to_int() == 1
    # value at the pure factor swap is theta evaluated at the identity: +1
    assert val((2, 3, 0, 1)) == CyclotomicNumber.one(group_conductor(W))
    TW = character_table(W)
    assert TW.index_of(chi) is not None


def test_wreath_s3_two_copies():
    S3 = load("s3").group
    theta = character_table(S3).rows[-1]
    W, chi, _val = wreath_extension(S3, theta, 2)
    assert W.order == 72
    assert chi.degree().to_int() == 4
    assert inner_product_int(chi, chi) == 1


def test_wreath_product_action_oracle():
    """Tensor-permutation value for the permutation character equals the
    fixed-tuple count of the product action (an independent module-level
    oracle for the cycle-product order)."""
    from itertools import product as iproduct

    S3 = load("s3").group
    n = group_conductor(S3)
    permchar_vals = [
        CyclotomicNumber.from_rational(
            sum(1 for p in range(3) if rep[p] == p), n)
        for rep, _size in S3.conjugacy_classes()
    ]
    from hclab.chartab import ClassFunction

    permchar = ClassFunction(S3, permchar_vals)
    # permchar = trivial + 2-dim: not irreducible, so drive value_at directly
    from hclab.perm import wreath_product

    m = 3
    W, dec = wreath_product(S3, m)

    def fixed_tuples(w):
        ks, sigma = dec(w)
        count = 0
        for tup in iproduct(range(3), repeat=m):
            img = [0] * m
            for c in range(m):
                img[c] = ks[c][tup[sigma.index(c)]]
            if tuple(img) == tup:
                count += 1
        return count

    def cycle_value(w):
        ks, sigma = dec(w)
        seen = [False] * m
        out = 1
        for start in range(m):
            if seen[start]:
                continue
            prod = S3.identity
            b = start
            while not seen[b]:
                seen[b] = True
                prod = pmul(prod, ks[b])
                b = sigma[b]
            out *= sum(1 for x in range(3) if prod[x] == x)
        return out

    random.seed(7)
    els = W.elements()
    for _ in range(80):
        w = random.choice(els)
        assert fixed_tuples(w) == cycle_value(w)


def test_wreath_value_conjugation_invariance():
    S3 = load("s3").group
    theta = character_table(S3).rows[-1]
    W, _chi, val = wreath_extension(S3, theta, 3)
    random.seed(11)
    els = W.elements()
    for _ in range(50):
        w, g = random.choice(els), random.choice(els)
        assert val(pconj(w, g)) == val(w)


def test_wreath_rejects_reducible():
    S3 = load("s3").group
    T = character_table(S3)
    lin = [r for r in T.rows if r.degree().to_int() == 1]
    reducible = lin[0] + lin[1]
    with pytest.raises(InputError):
        wreath_extension(S3, reducible, 2)


def test_cyclic_quotient_extension_criterion():
    """Invariant theta with cyclic inertia quotient always extends."""
    from hclab.perm import perm_order

    for name, sub in (("s3", "C3"), ("gl2_3", "SL2"), ("s4", "A4")):
        gf = load(name)
        M, N = gf.group, gf.subgroup(sub)
        for theta in character_table(N).rows:
            rep = clifford_decomposition(M, N, theta)
            if rep.inertia.order != M.order:
                continue  # theta not invariant
            omega = rep.omega
            is_cyclic = any(perm_order(x) == omega.order
                            for x in omega.elements())
            if is_cyclic:
                assert rep.extendable, (name, rep.theta_index)
