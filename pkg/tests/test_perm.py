"""Permutation groups: chain data, classes, quotients, products."""

import pytest

from hclab.corpus import load
from hclab.errors import CapacityError, InputError
from hclab.perm import (
    AbelianGroup,
    GroupHom,
    PermGroup,
    SemidirectGroup,
    direct_product,
    format_perm,
    group_from_generators,
    identity_perm,
    parse_perm,
    perm_order,
    pinv,
    pmul,
    wreath_product,
)


def closure_order(gens, degree):
    """Independent oracle: BFS closure of the generating set."""
    ident = identity_perm(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def test_parse_and_format():
    p = parse_perm("(1 2 3)(4 5)", 6)
    assert p == (1, 2, 0, 4, 3, 5)
    assert format_perm(p) == "(1 2 3)(4 5)"
    assert parse_perm("()", 3) == (0, 1, 2)
    assert parse_perm("(1, 2)", 2) == (1, 0)


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        parse_perm("(1 2", 3)
    with pytest.raises(InputError):
        parse_perm("(1 7)", 3)
    with pytest.raises(InputError):
        parse_perm("(1 1)", 3)


def test_spec_order_examples():
    assert group_from_generators(3, ["(1 2)", "(1 2 3)"]).order == 6
    assert group_from_generators(4, ["(1 2 3 4)", "(1 3)"]).order == 8


def test_gl23_on_vectors_has_order_48():
    G = load("gl2_3").group
    assert G.degree == 8
    assert G.order == 48
    assert closure_order(G.generators, 8) == 48


def test_chain_order_equals_enumeration():
    for name in ("s3", "s4", "s5", "d8", "q8", "a4", "gl2_3", "gl3_2", "s3_wr_c2"):
        G = load(name).group
        assert len(G.elements()) == G.order
        assert closure_order(G.generators, G.degree) == G.order


def test_class_equation():
    for name in ("s4", "q8", "gl2_3", "gl3_2"):
        G = load(name).group
        classes = G.conjugacy_classes()
        assert sum(s for _r, s in classes) == G.order
        assert all(G.order % s == 0 for _r, s in classes)


def test_class_counts():
    assert len(load("s3").group.conjugacy_classes()) == 3
    assert len(load("s4").group.conjugacy_classes()) == 5
    assert len(load("gl2_3").group.conjugacy_classes()) == 8


def test_class_ordering_is_deterministic():
    G = load("s4").group
    keys = [(perm_order(rep), size) for rep, size in G.conjugacy_classes()]
    assert keys == sorted(keys)
    assert keys == [(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]


def test_membership_and_subgroup_checks():
    S4 = load("s4").group
    V4 = load("s4").subgroup("V4")
    assert S4.is_subgroup(V4)
    assert S4.is_normal(V4)
    assert parse_perm("(1 2)(3 4)", 4) in V4
    assert parse_perm("(1 2)", 4) not in V4


def test_quotients():
    gf = load("s3")
    Q, hom = gf.group.quotient(gf.subgroup("C3"))
    assert Q.order == 2
    gf = load("gl2_3")
    Q, hom = gf.group.quotient(gf.subgroup("SL2"))
    assert Q.order == 2 and Q.is_abelian()
    assert hom.kernel().order == 24
    gf = load("d8")
    Q, _hom = gf.group.quotient(gf.subgroup("Z"))
    assert Q.order == 4 and Q.exponent() == 2  # C2 x C2


def test_quotient_requires_normality():
    S4 = load("s4").group
    H = S4.subgroup([parse_perm("(1 2)", 4)])
    with pytest.raises(InputError):
        S4.quotient(H)


def test_hom_rejects_non_homomorphism():
    S3 = load("s3").group
    a, b = S3.generators  # (1 2) and (1 2 3)
    with pytest.raises(InputError):
        GroupHom(S3, S3, {a: b, b: a})


def test_semidirect_c3_by_inverting_c2_is_s3():
    C3 = group_from_generators(3, ["(1 2 3)"])
    sd = SemidirectGroup(C3, AbelianGroup([2]), [[pinv(C3.generators[0])]])
    P, embed = sd.permutation_group()
    assert P.order == 6
    assert sorted(s for _r, s in P.conjugacy_classes()) == [1, 2, 3]
    # presentation check: the acting involution inverts the 3-cycle
    g = embed((C3.generators[0], (0,)))
    a = embed((C3.identity, (1,)))
    assert pmul(pmul(a, g), a) == embed((pinv(C3.generators[0]), (0,)))


def test_semidirect_sl23_by_c2_is_gl23():
    gf = load("sl2_3_c2")
    G = gf.group
    assert G.order == 48
    ref = load("gl2_3").group
    mine = sorted(s for _r, s in G.conjugacy_classes())
    theirs = sorted(s for _r, s in ref.conjugacy_classes())
    assert mine == theirs
    assert len(G.conjugacy_classes()) == 8


def test_semidirect_swap_wreath():
    S3 = group_from_generators(3, ["(1 2)", "(1 2 3)"])
    base = direct_product(S3, S3)
    # the swap automorphism is conjugation by the factor-exchanging involution
    swap = tuple((p + 3) % 6 for p in range(6))
    images = [pmul(pmul(swap, g), swap) for g in base.generators]
    sd = SemidirectGroup(base, AbelianGroup([2]), [images])
    P, _embed = sd.permutation_group()
    W, _dec = wreath_product(S3, 2)
    assert P.order == 72 == W.order
    assert len(P.conjugacy_classes()) == len(W.conjugacy_classes()) == 9


def test_semidirect_trivial_acting_group():
    C3 = group_from_generators(3, ["(1 2 3)"])
    sd = SemidirectGroup(C3, AbelianGroup([1]), [])
    P, _embed = sd.permutation_group()
    assert P.order == C3.order
    assert sorted(s for _r, s in P.conjugacy_classes()) == \
        sorted(s for _r, s in C3.conjugacy_classes())


def test_semidirect_rejects_bad_action():
    C3 = group_from_generators(3, ["(1 2 3)"])
    with pytest.raises(InputError):
        # (1 2) is not even an element of C3
        SemidirectGroup(C3, AbelianGroup([2]), [[parse_perm("(1 2)", 3)]])


def test_capacity_error():
    S5 = group_from_generators(5, ["(1 2)", "(1 2 3 4 5)"])  # fresh, uncached
    with pytest.raises(CapacityError):
        S5.elements(bound=50)


def test_normalizer_and_centralizer():
    S4 = load("s4").group
    V4 = load("s4").subgroup("V4")
    assert S4.normalizer(V4).order == 24  # V4 is normal
    H = S4.subgroup([parse_perm("(1 2)", 4)])
    assert S4.normalizer(H).order == 4
    x = parse_perm("(1 2)(3 4)", 4)
    assert S4.centralizer(x).order == 8


def test_wreath_block_decomposition():
    S3 = group_from_generators(3, ["(1 2)", "(1 2 3)"])
    W, dec = wreath_product(S3, 3)
    assert W.order == 6**3 * 6
    for w in list(W.elements())[::97]:
        ks, sigma = dec(w)
        rebuilt = [0] * 9
        for b in range(3):
            for j in range(3):
                rebuilt[b * 3 + j] = sigma[b] * 3 + ks[sigma[b]][j]
        assert tuple(rebuilt) == w
