"""Structure-constant algebras: twisted/skew group algebras and corners."""

import pytest

from hclab.algebra import (
    Cocycle2,
    GroupOps,
    abelian_characters,
    central_idempotents_abelian,
    corner,
    left_ideal_dimension,
    skew_corner_report,
    skew_group_algebra,
    twisted_group_algebra,
)
from hclab.corpus import load
from hclab.cyclo import CyclotomicNumber
from hclab.errors import InputError
from hclab.perm import AbelianGroup


def ops(*orders):
    return GroupOps.from_abelian(AbelianGroup(list(orders)))


def invert_action(om):
    def act(x, w):
        return om.inv(w) if any(x) else w

    return act


def test_trivial_cocycle_c2_two_idempotents():
    C2 = ops(2)
    A = twisted_group_algebra(C2, Cocycle2.trivial(C2, 2))
    assert A.dim == 2
    assert A.center_dimension() == 2
    chars, idems = central_idempotents_abelian(C2, conductor=2)
    half = CyclotomicNumber.from_rational(1, 2) * \
        CyclotomicNumber.from_rational(1, 2).inverse()  # just 1
    total = A.zero()
    for e in idems:
        assert A.multiply(e, e) == e
        total = A.add(total, e)
    assert total == A.unit


def test_klein_nontrivial_cocycle_center_one():
    alpha = Cocycle2.klein_nontrivial()
    A = twisted_group_algebra(alpha.group, alpha)
    assert A.dim == 4
    assert A.center_dimension() == 1  # a single 2-dim irreducible


def test_c3_fourier_idempotents():
    C3 = ops(3)
    A = twisted_group_algebra(C3, Cocycle2.trivial(C3, 3))
    chars, idems = central_idempotents_abelian(C3, conductor=3)
    assert len(idems) == 3
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            assert A.multiply(e, f) == (e if i == j else A.zero())


def test_c6_idempotent_orthogonality():
    C6 = ops(6)
    A = twisted_group_algebra(C6, Cocycle2.trivial(C6, 6))
    chars, idems = central_idempotents_abelian(C6, conductor=6)
    total = A.zero()
    for i, e in enumerate(idems):
        total = A.add(total, e)
        for j, f in enumerate(idems):
            assert A.multiply(e, f) == (e if i == j else A.zero())
    assert total == A.unit


def test_cocycle_identity_enforced():
    C2 = ops(2)
    one = CyclotomicNumber.one(4)
    minus = CyclotomicNumber.from_rational(-1, 4)
    vals = {(a, b): one for a in C2.elements for b in C2.elements}
    vals[((1,), (1,))] = minus  # fine: this IS a cocycle (sign of C2)
    Cocycle2(C2, vals, 4)
    bad = dict(vals)
    bad[((0,), (1,))] = minus  # breaks normalization
    with pytest.raises(InputError):
        Cocycle2(C2, bad, 4)


def test_skew_c3_c2_is_group_algebra_of_s3():
    """Structure constants of C[C3] x| C2 match C[S3] under the pair map."""
    C3 = ops(3)
    W = ops(2)
    A = skew_group_algebra(C3, W, invert_action(C3))
    assert A.dim == 6
    assert A.center_dimension() == 3  # S3 has three classes

    S3 = load("s3").group
    GO = GroupOps.from_perm(S3)
    B = twisted_group_algebra(GO, Cocycle2.trivial(GO, 1))
    # map the pair (w^a, s^b) to the S3 element t^a s^b
    t = S3.generators[1]  # (1 2 3)
    s = S3.generators[0]  # (1 2)
    from hclab.perm import identity_perm, pmul

    def to_s3(pair_index):
        a, x = divmod(pair_index, 2)
        g = identity_perm(3)
        for _ in range(a):
            g = pmul(g, t)
        if x:
            g = pmul(g, s)
        return GO.index[g]

    # compare products through the bijection
    for i in range(6):
        for j in range(6):
            (k1, c1), = A.structure[(i, j)]
            (k2, c2), = B.structure[(to_s3(i), to_s3(j))]
            assert to_s3(k1) == k2
            assert c1 == CyclotomicNumber.one(A.conductor)
            assert c2 == CyclotomicNumber.one(B.conductor)


def test_skew_dimension_always_product():
    K = ops(2, 2)
    W = ops(2)

    def swap(x, w):
        return (w[1], w[0]) if any(x) else w

    A = skew_group_algebra(K, W, swap)
    assert A.dim == 8


def test_skew_rejects_invalid_action():
    C3 = ops(3)
    W = ops(2)

    def bad(x, w):
        return (1,) if any(x) else w  # not an automorphism

    with pytest.raises(InputError):
        skew_group_algebra(C3, W, bad)


def test_corner_dims_c3_c2():
    C3 = ops(3)
    W = ops(2)
    act = invert_action(C3)
    seen = []
    for eta in range(3):
        rep = skew_corner_report(C3, W, act, eta)
        assert rep["corner_dim"] == rep["stabilizer_order"]
        assert rep["group_law_holds"] and rep["basis_independent"]
        assert rep["isomorphic_to_group_algebra"]
        assert rep["left_ideal_dim"] == 2
        seen.append(rep["corner_dim"])
    assert sorted(seen) == [1, 1, 2]


def test_corner_full_unit_returns_whole_algebra():
    C3 = ops(3)
    W = ops(2)
    A = skew_group_algebra(C3, W, invert_action(C3))
    sub, basis, _p = corner(A, A.unit)
    assert sub.dim == A.dim


def test_corner_rejects_non_idempotent():
    C3 = ops(3)
    A = twisted_group_algebra(C3, Cocycle2.trivial(C3, 3))
    with pytest.raises(InputError):
        corner(A, A.basis_vector(1))


def test_weighted_corner_sum_accounts_for_algebra():
    cases = [
        (ops(3), ops(2), None),
        (ops(2, 2), ops(2), "swap"),
    ]
    for om, wy, kind in cases:
        if kind == "swap":
            act = lambda x, w: (w[1], w[0]) if any(x) else w
        else:
            act = invert_action(om)
        total = 0
        ideal_total = 0
        for eta in range(om.order):
            rep = skew_corner_report(om, wy, act, eta)
            total += rep["corner_dim"] * rep["orbit_size"]
            ideal_total += rep["left_ideal_dim"]
        assert total == om.order * wy.order
        assert ideal_total == om.order * wy.order


def test_abelian_characters_are_all_homomorphisms():
    om = ops(2, 3)
    chars = abelian_characters(om, 6)
    assert len(chars) == 6
    for chi in chars:
        for a in om.elements:
            for b in om.elements:
                assert chi[om.mul(a, b)] == chi[a] * chi[b]


def test_cross_module_endomorphism_dimension():
    """End of R(Ind theta) computed character-theoretically equals
    |Omega| * |W| from the crossed-product model."""
    from hclab.chartab import character_table, induce, inner_product_int
    from hclab.hcseries import hc_induce

    datum = load("gl2_3").bn_datum()
    rec = datum.record("B")
    reco = datum.record("Bo")
    L, L0 = rec.L, reco.L
    TL0 = character_table(L0)
    for theta0 in TL0.rows:
        ind = induce(theta0, L)
        R = hc_induce(datum, "B", ind)
        endo = inner_product_int(R, R)
        # Omega = I_L(theta0)/L0 = L/L0 (L abelian), W = relative Weyl of the
        # SL2-side record, a C2 for both characters of the center
        omega_order = L.order // L0.order
        from hclab.hcseries import relative_weyl

        W_tau, _e, _w = relative_weyl(datum, "Bo", theta0)
        assert endo == omega_order * W_tau.order
