"""Coxeter groups of small rank as permutation groups, with the reflection
character, standard parabolic subgroups, parabolic-restriction separation,
and b-invariants.

Realizations: A_n permutes n+1 coordinate points; B_n acts as signed
permutations on the 2n points +-e_i; D4 is the even-sign-change subgroup of
B4; G2 acts on its six long roots (integer coordinates in the sum-zero
plane of Z^3); F4 acts on its 48 roots; I2(m) is the dihedral action on the
vertices of an m-gon.

The reflection character is exact: traces are solved from the action on a
spanning set of root/point vectors (rational arithmetic), except in type
I2(m) where rotation values are sums of two conjugate roots of unity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .chartab import (
    ClassFunction,
    KIND_VIRTUAL,
    character_table,
    class_fusion,
    group_conductor,
    inner_product_int,
)
from .cyclo import CyclotomicNumber
from .errors import InputError
from .perm import PermGroup, perm_order, pmul

SUPPORTED = "A1 A2 A3 A4 B2 B3 D4 G2 F4 I2(m), 3 <= m <= 12"


@dataclass
class CoxeterRealization:
    label: str
    rank: int
    group: PermGroup
    simple_reflections: list[tuple]
    reflection_character: ClassFunction
    positive_roots: int

    def parabolic(self, subset) -> PermGroup:
        gens = [self.simple_reflections[i] for i in subset]
        return self.group.subgroup(gens) if gens else self.group.trivial_subgroup()

    def proper_parabolic_subsets(self):
        out = []
        for size in range(self.rank):
            out.extend(combinations(range(self.rank), size))
        return out


def _perm_of_vectors(vectors, image_fn):
    index = {v: i for i, v in enumerate(vectors)}
    return tuple(index[image_fn(v)] for v in vectors)


def _reflection_in(alpha, vectors):
    aa = sum(Fraction(x) * x for x in alpha)

    def image(v):
        va = sum(Fraction(x) * y for x, y in zip(v, alpha))
        return tuple(Fraction(x) - 2 * va / aa * a for x, a in zip(v, alpha))

    return _perm_of_vectors(vectors, image)


def _trace_on_span(perm, vectors, rank):
    """Trace of the linear map sending each vector to its image, expressed
    on a maximal independent subset; exact rational."""
    # pick the first `rank` linearly independent vectors
    dim = len(vectors[0])
    basis_idx = []
    rows: list[list[Fraction]] = []
    for i, v in enumerate(vectors):
        cand = rows + [[Fraction(x) for x in v]]
        if _rank_of(cand) > len(rows):
            rows = cand
            basis_idx.append(i)
            if len(basis_idx) == rank:
                break
    assert len(basis_idx) == rank
    B = [[Fraction(vectors[j][d]) for j in basis_idx] for d in range(dim)]
    Y = [[Fraction(vectors[perm[j]][d]) for j in basis_idx] for d in range(dim)]
    # solve B X = Y column-wise; X is rank x rank
    aug = [B[d] + Y[d] for d in range(dim)]
    piv_rows = []
    r = 0
    for c in range(rank):
        piv = next((i for i in range(r, dim) if aug[i][c]), None)
        assert piv is not None
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(dim):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    trace = Fraction(0)
    for i in range(rank):
        trace += aug[i][rank + i]
    return trace


def _rank_of(rows):
    m = [row[:] for row in rows]
    nrows = len(m)
    if not nrows:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def _realize_on_vectors(label, rank, simple_roots, vectors, npos):
    gens = [_reflection_in(a, vectors) for a in simple_roots]
    G = PermGroup(len(vectors), gens)
    n = group_conductor(G)
    vals = []
    for rep, _size in G.conjugacy_classes():
        tr = _trace_on_span(rep, vectors, rank)
        vals.append(CyclotomicNumber.from_rational(tr, n))
    chi = ClassFunction(G, vals, KIND_VIRTUAL)
    return CoxeterRealization(label, rank, G, gens, chi, npos)


def _type_a(n):
    # n+1 coordinate points; reflection character = fixed points - 1
    deg = n + 1
    gens = []
    for i in range(n):
        img = list(range(deg))
        img[i], img[i + 1] = img[i + 1], img[i]
        gens.append(tuple(img))
    G = PermGroup(deg, gens)
    cond = group_conductor(G)
    vals = [
        CyclotomicNumber.from_rational(sum(1 for p in range(deg) if rep[p] == p) - 1, cond)
        for rep, _ in G.conjugacy_classes()
    ]
    chi = ClassFunction(G, vals, KIND_VIRTUAL)
    return CoxeterRealization(f"A{n}", n, G, gens, chi, n * (n + 1) // 2)


def _type_b(n):
    # signed permutations on the 2n vectors +-e_i
    vectors = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        vectors.append(tuple(e))
    for i in range(n):
        e = [0] * n
        e[i] = -1
        vectors.append(tuple(e))
    roots = [tuple(a - b for a, b in zip(vectors[i], vectors[i + 1]))
             for i in range(n - 1)]
    roots.append(vectors[n - 1])  # e_n
    return _realize_on_vectors(f"B{n}", n, roots, vectors, n * n)


def _type_d4():
    vectors = []
    for i in range(4):
        for s in (1, -1):
            e = [0] * 4
            e[i] = s
            vectors.append(tuple(e))
    vectors.sort()
    roots = [
        (1, -1, 0, 0),
        (0, 1, -1, 0),
        (0, 0, 1, -1),
        (0, 0, 1, 1),
    ]
    return _realize_on_vectors("D4", 4, roots, vectors, 12)


def _type_g2():
    # long roots of G2 in the sum-zero plane of Z^3
    longs = sorted({
        (2, -1, -1), (-1, 2, -1), (-1, -1, 2),
        (-2, 1, 1), (1, -2, 1), (1, 1, -2),
    })
    simple = [(1, -1, 0), (-1, 2, -1)]  # short, long
    return _realize_on_vectors("G2", 2, simple, longs, 6)


def _type_f4():
    vectors = set()
    for i in range(4):
        for s in (2, -2):
            e = [0] * 4
            e[i] = s
            vectors.add(tuple(e))
    for i, j in combinations(range(4), 2):
        for si, sj in product((2, -2), repeat=2):
            e = [0] * 4
            e[i], e[j] = si, sj
            vectors.add(tuple(e))
    for signs in product((1, -1), repeat=4):
        vectors.add(signs)
    vectors = sorted(vectors)
    assert len(vectors) == 48
    # Bourbaki simple roots, doubled to keep integer coordinates
    simple = [
        (0, 2, -2, 0),
        (0, 0, 2, -2),
        (0, 0, 0, 2),
        (1, -1, -1, -1),
    ]
    return _realize_on_vectors("F4", 4, simple, vectors, 24)


def _type_i2(m):
    # dihedral action on the m-gon vertices 0..m-1
    s1 = tuple((-i) % m for i in range(m))
    s2 = tuple((1 - i) % m for i in range(m))
    G = PermGroup(m, [s1, s2])
    cond = group_conductor(G)
    vals = []
    for rep, _size in G.conjugacy_classes():
        shift = rep[0]
        if all(rep[i] == (i + shift) % m for i in range(m)):
            z = CyclotomicNumber.root_of_unity(m, shift).promote(cond) \
                if m > 1 else CyclotomicNumber.one(cond)
            vals.append(z + z.conjugate())
        else:
            vals.append(CyclotomicNumber.zero(cond))
    chi = ClassFunction(G, vals, KIND_VIRTUAL)
    return CoxeterRealization(f"I2({m})", 2, G, [s1, s2], chi, m)


def coxeter_group(type_label: str) -> CoxeterRealization:
    """Build a supported Coxeter realization from a label like 'A3' or 'I2(7)'."""
    label = type_label.strip().upper().replace(" ", "")
    m = re.fullmatch(r"A([1-4])", label)
    if m:
        return _type_a(int(m.group(1)))
    m = re.fullmatch(r"B([2-3])", label)
    if m:
        return _type_b(int(m.group(1)))
    if label == "D4":
        return _type_d4()
    if label == "G2":
        return _type_g2()
    if label == "F4":
        return _type_f4()
    m = re.fullmatch(r"I2\((\d+)\)", label)
    if m:
        order = int(m.group(1))
        if not 3 <= order <= 12:
            raise InputError("I2(m) supported for 3 <= m <= 12")
        return _type_i2(order)
    raise InputError(f"unsupported Coxeter type {type_label!r};"
                     f" supported: {SUPPORTED}")


# -- separation by proper parabolic restrictions --------------------------------


def separation_report(W: CoxeterRealization):
    """All unordered pairs of distinct irreducibles with equal degree and
    identical restrictions to every proper standard parabolic subgroup."""
    T = character_table(W.group)
    signatures = []
    for chi in T.rows:
        sig = [chi.degree().to_int()]
        for subset in W.proper_parabolic_subsets():
            WJ = W.parabolic(subset)
            fusion = class_fusion(WJ, W.group)
            sig.append(tuple(chi.values[k].sort_key() for k in fusion))
        signatures.append(tuple(sig))
    pairs = []
    for i in range(len(T.rows)):
        for j in range(i + 1, len(T.rows)):
            if signatures[i] == signatures[j]:
                pairs.append((i, j))
    return pairs


def verify_separation(W: CoxeterRealization, pairs) -> bool:
    """Re-verification pass: every pair NOT reported is distinguished by the
    degree or by some proper parabolic restriction."""
    T = character_table(W.group)
    reported = set(pairs)
    subsets = W.proper_parabolic_subsets()
    fusions = [class_fusion(W.parabolic(s), W.group) for s in subsets]
    for i in range(len(T.rows)):
        for j in range(i + 1, len(T.rows)):
            if (i, j) in reported:
                continue
            a, b = T.rows[i], T.rows[j]
            if a.degree().to_int() != b.degree().to_int():
                continue
            if any(
                any(a.values[k] != b.values[k] for k in fusion)
                for fusion in fusions
            ):
                continue
            return False
    return True


# -- b-invariants -----------------------------------------------------------------


def symmetric_power_characters(W: CoxeterRealization, kmax: int):
    """Characters of Sym^k of the reflection representation, k = 0..kmax.

    Newton's identity on class functions: k*h_k = sum_{i=1..k} p_i h_{k-i},
    with p_i(w) = chi_V(w**i).
    """
    G = W.group
    chiV = W.reflection_character
    classes = G.conjugacy_classes()
    n = group_conductor(G)
    power_values = []
    for rep, _size in classes:
        e = perm_order(rep)
        vals = {}
        g = G.identity
        for t in range(e):
            vals[t] = chiV.values[G.class_index(g)]
            g = pmul(g, rep)
        power_values.append(vals)

    def p_char(i):
        return ClassFunction(
            G,
            [power_values[k][i % len(power_values[k])] for k in range(len(classes))],
            KIND_VIRTUAL,
        )

    hs = [ClassFunction(G, [CyclotomicNumber.one(n)] * len(classes), KIND_VIRTUAL)]
    for k in range(1, kmax + 1):
        acc = ClassFunction(G, [CyclotomicNumber.zero(n)] * len(classes), KIND_VIRTUAL)
        for i in range(1, k + 1):
            acc = acc + p_char(i).tensor(hs[k - i])
        hs.append(acc * Fraction(1, k))
    return hs


def b_invariant(W: CoxeterRealization, chi: ClassFunction) -> int:
    """Smallest k with <Sym^k(chi_V), chi> > 0."""
    hs = symmetric_power_characters(W, W.positive_roots)
    for k, h in enumerate(hs):
        if inner_product_int(h, chi) > 0:
            return k
    raise InputError("no symmetric power up to |Phi+| contains chi")


def b_invariants(W: CoxeterRealization) -> list[int]:
    T = character_table(W.group)
    hs = symmetric_power_characters(W, W.positive_roots)
    out = []
    for chi in T.rows:
        for k, h in enumerate(hs):
            if inner_product_int(h, chi) > 0:
                out.append(k)
                break
        else:
            raise InputError("no symmetric power up to |Phi+| contains a row")
    return out
