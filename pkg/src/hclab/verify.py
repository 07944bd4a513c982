"""The acceptance suite: every exit criterion as a callable check.

Each check returns a human-readable detail string and raises on failure
(AssertionError or a domain error).  The CLI `verify` subcommand and the
test suite both run exactly these.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from . import corpus
from .algebra import GroupOps, skew_corner_report
from .chartab import (
    character_table,
    group_conductor,
    induce,
    inner_product,
    inner_product_int,
    restrict,
)
from .clifford import clifford_decomposition, regular_sum_check, wreath_extension
from .coxeter import b_invariants, coxeter_group, separation_report, verify_separation
from .cyclo import CyclotomicNumber
from .hcseries import hc_induce, hc_partition, q_parameter, relative_weyl, \
    disconnected_restriction_check
from .laurent import cyclotomic_poly
from .perm import AbelianGroup, PermGroup, perm_order
from .schur import g2_table, schur_a1, schur_ratio

CLIFFORD_CASES = [
    ("s3", "C3"),
    ("a4", "V4"),
    ("s4", "V4"),
    ("d8", "Z"),
    ("q8", "Z"),
    ("s3_wr_c2", "S3xS3"),
    ("gl2_3", "SL2"),
]

CORPUS_GROUPS = [
    "s3", "s4", "s5", "a4", "d8", "q8", "c6",
    "s3_wr_c2", "gl2_3", "gl2_5", "gl3_2", "sl2_3_c2",
]


def check_g2_schur_table() -> str:
    """Criterion 1: the three-row G2 Schur comparison table, exactly."""
    phi = cyclotomic_poly
    expected = {
        1: (3 * phi(6), phi(3)),
        2: (phi(3) * phi(12), phi(3) * phi(6) ** 2),
        5: (phi(3) * phi(6) ** 2 * phi(12) * phi(30),
            phi(3) * phi(15) * phi(24)),
    }
    rows = g2_table()
    for row in rows:
        lhs, rhs = expected[row.k]
        assert row.lhs == lhs, f"k={row.k} lhs {row.lhs} != {lhs}"
        assert row.rhs == rhs, f"k={row.k} rhs {row.rhs} != {rhs}"
        assert row.lhs_factored.recompose() == row.lhs
        assert row.rhs_factored.recompose() == row.rhs
        assert row.lhs_factored.fully_factored()
        assert row.rhs_factored.fully_factored()
    return "; ".join(
        f"k={r.k}: {r.lhs_factored.phi_string()} vs {r.rhs_factored.phi_string()}"
        for r in rows
    )


def check_schur_distinctness() -> str:
    """Criterion 2: unequal evaluations plus Zsigmondy witnesses."""
    points = (2, 3, 4, 5, 7, 8, 9)
    count = 0
    for row in g2_table():
        for q0 in points:
            cert = row.certify(q0)
            assert cert["unequal"], f"k={row.k} q0={q0} sides equal"
            if q0 >= 3:
                assert cert["witness"] is not None, f"no witness k={row.k} q0={q0}"
                assert cert["divides_lhs"] and not cert["divides_rhs"], \
                    f"witness fails k={row.k} q0={q0}: {cert}"
            count += 1
    return f"{count} (k, q0) pairs unequal, witnesses divide exactly one side"


def _all_irreducibles(name, sub):
    gf = corpus.load(name)
    M, N = gf.group, gf.subgroup(sub)
    return M, N, character_table(N).rows


def check_clifford_regular_sum() -> str:
    """Criterion 3: the regular-sum identity over the whole corpus."""
    total = 0
    for name, sub in CLIFFORD_CASES:
        M, N, thetas = _all_irreducibles(name, sub)
        for theta in thetas:
            regular_sum_check(M, N, theta)
            total += 1
        # independence clause: the sum is unchanged under M-conjugate thetas
        theta = thetas[0]
        for g in M.generators:
            assert regular_sum_check(M, N, theta.conjugate_by(g)).values == \
                regular_sum_check(M, N, theta).values
    return f"regular sum verified for {total} (M, N, theta) cases"


def check_gallagher_counts() -> str:
    """Criterion 4: <Ind theta, Ind theta> = |Omega|; Gallagher bijective."""
    checked = gallagher_checked = 0
    for name, sub in CLIFFORD_CASES:
        M, N, thetas = _all_irreducibles(name, sub)
        for theta in thetas:
            rep = clifford_decomposition(M, N, theta)
            ind = induce(theta, M)
            assert inner_product_int(ind, ind) == rep.omega.order, \
                f"{name}: <Ind,Ind> != |Omega|"
            assert sum(d * d for d in rep.label_dims) == rep.omega.order
            checked += 1
            if rep.extendable and rep.omega_abelian:
                assert rep.gallagher is not None
                assert len(rep.above_indices) == rep.omega.order
                gallagher_checked += 1
    return (f"{checked} cases; Gallagher bijection verified in"
            f" {gallagher_checked} extendable abelian cases")


def check_wreath_extension() -> str:
    """Criterion 5: tensor-permutation extension for K in {C2, S3}, m in {2, 3}."""
    C2 = PermGroup(2, [(1, 0)])
    S3 = corpus.load("s3").group
    done = 0
    for K in (C2, S3):
        TK = character_table(K)
        for theta in TK.rows:
            for m in (2, 3):
                W, chi, _val = wreath_extension(K, theta, m)
                assert inner_product_int(chi, chi) == 1, "extension not irreducible"
                base_gens = []
                d = K.degree
                for b in range(m):
                    for g in K.generators:
                        img = list(range(W.degree))
                        for j in range(d):
                            img[b * d + j] = b * d + g[j]
                        base_gens.append(tuple(img))
                base = W.subgroup(base_gens)
                res = restrict(chi, base)
                nb = group_conductor(base)
                expected = []
                for rep, _size in base.conjugacy_classes():
                    v = CyclotomicNumber.one(nb)
                    for b in range(m):
                        comp = tuple(rep[b * d + j] - b * d for j in range(d))
                        v = v * theta(comp).promote(nb)
                    expected.append(v)
                assert list(res.values) == expected, "Res != theta^boxtimes m"
                done += 1
    return f"{done} (K, theta, m) wreath extensions irreducible with exact Res"


def check_hc_partition() -> str:
    """Criterion 6: series partition and census for GL2(3), GL2(5), GL3(2)."""
    details = []
    for name, q in (("gl2_3", 3), ("gl2_5", 5)):
        datum = corpus.load(name).bn_datum()
        TG = character_table(datum.G)
        part = hc_partition(datum)
        cuspidal = [s for s in part.series if s.record == "G"]
        expect = (q * q - q) // 2
        assert len(cuspidal) == expect, f"{name}: {len(cuspidal)} cuspidal series"
        for s in cuspidal:
            assert [TG.degrees()[i] for i in s.members] == [q - 1]
        details.append(f"{name}: {len(part.series)} series, {expect} cuspidal"
                       f" of degree {q - 1}")
    datum = corpus.load("gl3_2").bn_datum()
    TG = character_table(datum.G)
    part = hc_partition(datum)
    censuses = sorted(
        tuple(sorted(TG.degrees()[i] for i in s.members)) for s in part.series
    )
    assert censuses == [(1, 6, 8), (3,), (3,), (7,)], censuses
    details.append("gl3_2: {1,6,8}, {7}, {3}, {3}")
    return "; ".join(details)


def check_howlett_lehrer_counts() -> str:
    """Criterion 7: <R(1), R(1)> = |W_1| on the three principal series."""
    expected = {"gl2_3": 2, "gl2_5": 2, "gl3_2": 6}
    out = []
    for name, want in expected.items():
        datum = corpus.load(name).bn_datum()
        rec = datum.record("B")
        TL = character_table(rec.L)
        trivial = [r for r in TL.rows
                   if all(v == r.values[0] for v in r.values)][0]
        W_tau, endo, warn = relative_weyl(datum, "B", trivial)
        assert W_tau.order == endo == want, (name, W_tau.order, endo)
        assert not warn
        out.append(f"{name}: |W_tau| = <R,R> = {want}")
    return "; ".join(out)


def check_q_parameter() -> str:
    """Criterion 8: q-parameters match the A1 Schur ratio and degree formula."""
    out = []
    c1, ceps = schur_a1(1)
    for name, q0 in (("gl2_3", 3), ("gl2_5", 5)):
        datum = corpus.load(name).bn_datum()
        TG = character_table(datum.G)
        rec = datum.record("B")
        TL = character_table(rec.L)
        trivial = [r for r in TL.rows
                   if all(v == r.values[0] for v in r.values)][0]
        R = hc_induce(datum, "B", trivial)
        qp = q_parameter(R, TG)
        assert qp == q0, f"{name}: q-parameter {qp} != {q0}"
        assert qp == schur_ratio(c1, ceps, q0)
        dim_pi = R.degree().to_int()
        formula = sorted(
            Fraction(dim_pi) / c.evaluate(q0) for c in (c1, ceps)
        )
        actual = sorted(
            Fraction(TG.rows[i].degree().to_int())
            for i, _m in TG.constituents(R)
        )
        assert formula == actual, (name, formula, actual)
        out.append(f"{name}: q = {qp}, constituent degrees {actual}")
    return "; ".join(out)


def check_disconnected_restriction() -> str:
    """Criterion 9: both identity-component identities on the GL2(3) datum."""
    datum = corpus.load("gl2_3").bn_datum()
    done = []
    for rec_name in ("B", "Bo"):
        rec = datum.record(rec_name)
        TL = character_table(rec.L)
        for i, phi in enumerate(TL.rows):
            w = disconnected_restriction_check(datum, rec_name, phi)
            assert w.holds()
            done.append((rec_name, i, w.coset_count))
    twisted = [d for d in done if d[2] == 2]
    assert twisted, "no two-term twisted case exercised"
    return (f"{len(done)} (record, phi) pairs verified,"
            f" {len(twisted)} with a two-term twisted sum")


def check_corner_lemma() -> str:
    """Criterion 10: corner dimensions and group-law isomorphisms."""
    cases = []
    C3 = GroupOps.from_abelian(AbelianGroup([3]))
    W2 = GroupOps.from_abelian(AbelianGroup([2]))
    invert = lambda x, w: C3.inv(w) if x != W2.identity else w
    cases.append(("C3 by inverting C2", C3, W2, invert))
    K = GroupOps.from_abelian(AbelianGroup([2, 2]))
    swap = lambda x, w: (w[1], w[0]) if x != W2.identity else w
    cases.append(("C2xC2 by swapping C2", K, W2, swap))
    out = []
    for label, omega, weyl, action in cases:
        total = 0
        for eta in range(omega.order):
            rep = skew_corner_report(omega, weyl, action, eta)
            assert rep["corner_dim"] == rep["stabilizer_order"], rep
            assert rep["isomorphic_to_group_algebra"], rep
            assert rep["left_ideal_dim"] == weyl.order, rep
            total += rep["corner_dim"] * rep["orbit_size"]
        assert total == omega.order * weyl.order, (label, total)
        out.append(f"{label}: sum over eta of |orbit|*dim(corner)"
                   f" = {total} = |Omega||W|")
    return "; ".join(out)


def check_coxeter_separation() -> str:
    """Criterion 11: separation empty except the G2 degree-2 pair."""
    for label in ("A2", "A3", "A4", "B2", "B3", "D4", "F4"):
        W = coxeter_group(label)
        pairs = separation_report(W)
        assert pairs == [], f"{label}: unexpected pairs {pairs}"
        assert verify_separation(W, pairs)
    W = coxeter_group("G2")
    pairs = separation_report(W)
    assert len(pairs) == 1, pairs
    T = character_table(W.group)
    i, j = pairs[0]
    assert T.degrees()[i] == T.degrees()[j] == 2
    bs = b_invariants(W)
    assert sorted((bs[i], bs[j])) == [1, 2], (bs[i], bs[j])
    assert verify_separation(W, pairs)
    return ("empty for A2 A3 A4 B2 B3 D4 F4;"
            " G2 -> {phi_{2,1}, phi_{2,2}} with b-invariants {1, 2}")


def check_table_infrastructure() -> str:
    """Criterion 12: orthogonality and classical tables over the corpus."""
    for name in CORPUS_GROUPS:
        G = corpus.load(name).group
        T = character_table(G)
        assert sum(d * d for d in T.degrees()) == G.order, name
        rows = T.rows
        for i in range(len(rows)):
            for j in range(i, len(rows)):
                v = inner_product(rows[i], rows[j])
                assert v == (1 if i == j else 0), (name, i, j)
        # column orthogonality
        n = T.conductor
        for gi in range(len(T.classes)):
            for hi in range(gi, len(T.classes)):
                s = CyclotomicNumber.zero(n)
                for row in rows:
                    s = s + row.values[gi] * row.values[hi].conjugate()
                want = G.order // T.classes[gi][1] if gi == hi else 0
                assert s == want, (name, gi, hi)

    _check_s4_table()
    _check_s5_table()
    _check_d8_table()
    _check_q8_table()
    return (f"orthogonality suites over {len(CORPUS_GROUPS)} corpus groups;"
            " S4, S5, D8, Q8 match the classical tables")


def _column_map(T):
    """Map (element order, class size) -> column index; must be unambiguous."""
    out = {}
    for k, (rep, size) in enumerate(T.classes):
        out.setdefault((perm_order(rep), size), []).append(k)
    return out


def _check_s4_table():
    T = character_table(corpus.load("s4").group)
    cols = _column_map(T)
    order = [cols[key][0] for key in ((1, 1), (2, 6), (2, 3), (3, 8), (4, 6))]
    expected = {
        (1, 1, 1, 1, 1), (1, -1, 1, 1, -1), (2, 0, 2, -1, 0),
        (3, 1, -1, 0, -1), (3, -1, -1, 0, 1),
    }
    got = {tuple(r.values[k].to_int() for k in order) for r in T.rows}
    assert got == expected, got


def _check_s5_table():
    T = character_table(corpus.load("s5").group)
    cols = _column_map(T)
    order = [cols[key][0] for key in
             ((1, 1), (2, 10), (2, 15), (3, 20), (6, 20), (4, 30), (5, 24))]
    expected = {
        (1, 1, 1, 1, 1, 1, 1),
        (1, -1, 1, 1, -1, -1, 1),
        (4, 2, 0, 1, -1, 0, -1),
        (4, -2, 0, 1, 1, 0, -1),
        (5, 1, 1, -1, 1, -1, 0),
        (5, -1, 1, -1, -1, 1, 0),
        (6, 0, -2, 0, 0, 0, 1),
    }
    got = {tuple(r.values[k].to_int() for k in order) for r in T.rows}
    assert got == expected, got


def _check_d8_table():
    T = character_table(corpus.load("d8").group)
    cols = _column_map(T)
    e, z, r = cols[(1, 1)][0], cols[(2, 1)][0], cols[(4, 2)][0]
    refl = cols[(2, 2)]
    assert len(refl) == 2
    two_dim = [row for row in T.rows if row.degree().to_int() == 2]
    assert len(two_dim) == 1
    vals = two_dim[0].values
    assert vals[e].to_int() == 2 and vals[z].to_int() == -2
    assert vals[r].to_int() == 0
    assert all(vals[k].to_int() == 0 for k in refl)
    linear_sigs = set()
    for row in T.rows:
        if row.degree().to_int() != 1:
            continue
        a, b = (row.values[k].to_int() for k in refl)
        rot = row.values[r].to_int()
        assert rot == a * b and row.values[z].to_int() == 1
        linear_sigs.add((a, b))
    assert linear_sigs == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def _check_q8_table():
    T = character_table(corpus.load("q8").group)
    cols = _column_map(T)
    e, z = cols[(1, 1)][0], cols[(2, 1)][0]
    quats = cols[(4, 2)]
    assert len(quats) == 3
    two_dim = [row for row in T.rows if row.degree().to_int() == 2]
    assert len(two_dim) == 1
    vals = two_dim[0].values
    assert vals[e].to_int() == 2 and vals[z].to_int() == -2
    assert all(vals[k].to_int() == 0 for k in quats)
    patterns = []
    for row in T.rows:
        if row.degree().to_int() != 1:
            continue
        assert row.values[z].to_int() == 1
        patterns.append(tuple(sorted(row.values[k].to_int() for k in quats)))
    assert sorted(patterns) == [(-1, -1, 1)] * 3 + [(1, 1, 1)]


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


ALL_CHECKS = [
    (1, "g2-schur-table", check_g2_schur_table),
    (2, "schur-distinctness", check_schur_distinctness),
    (3, "clifford-regular-sum", check_clifford_regular_sum),
    (4, "gallagher-counts", check_gallagher_counts),
    (5, "wreath-extension", check_wreath_extension),
    (6, "hc-partition", check_hc_partition),
    (7, "howlett-lehrer-counts", check_howlett_lehrer_counts),
    (8, "q-parameter-degree-formula", check_q_parameter),
    (9, "disconnected-restriction", check_disconnected_restriction),
    (10, "corner-lemma", check_corner_lemma),
    (11, "coxeter-separation", check_coxeter_separation),
    (12, "table-infrastructure", check_table_infrastructure),
]


def run_all(checks=ALL_CHECKS):
    results = []
    for number, name, fn in checks:
        start = time.monotonic()
        try:
            detail = fn()
            passed = True
        except Exception as exc:  # noqa: BLE001 - report, don't crash the suite
            detail = f"{type(exc).__name__}: {exc}"
            passed = False
        results.append(CheckResult(number, name, passed,
                                   detail, time.monotonic() - start))
    return results
