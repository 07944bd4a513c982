"""Structure-constant algebras over cyclotomic numbers: twisted group
algebras, skew group algebras, central idempotents, and corner subalgebras
eAe cut out by idempotents.

All linear algebra is exact Gaussian elimination over the cyclotomic field;
no numerical rank decisions anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct
from math import lcm

from .chartab import character_table, group_conductor
from .cyclo import CyclotomicNumber
from .errors import InputError, InvariantViolation
from .perm import AbelianGroup, PermGroup, pinv, pmul

ASSOC_FULL_CHECK_DIM = 64


class GroupOps:
    """Uniform element/multiplication view of a small finite group."""

    def __init__(self, elements, mul, inv, identity, label):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.label = label

    @classmethod
    def from_abelian(cls, A: AbelianGroup) -> "GroupOps":
        return cls(A.elements(), A.mul, A.inv, A.identity, repr(A))

    @classmethod
    def from_perm(cls, G: PermGroup) -> "GroupOps":
        return cls(G.elements(), pmul, pinv, G.identity, repr(G))

    @property
    def order(self):
        return len(self.elements)

    def exponent(self) -> int:
        e = 1
        for x in self.elements:
            k = 1
            y = x
            while y != self.identity:
                y = self.mul(y, x)
                k += 1
            e = lcm(e, k)
        return e

    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in self.elements for b in self.elements
        )


def _element_order(omega: GroupOps, g) -> int:
    k = 1
    y = g
    while y != omega.identity:
        y = omega.mul(y, g)
        k += 1
    return k


def abelian_characters(omega: GroupOps, conductor: int):
    """All linear characters of an abelian group as dicts element -> value.

    Candidate root-of-unity images of a generating set are extended over the
    whole group by closure, discarding inconsistent assignments; the |Omega|
    survivors are the characters.  Deterministic order: lexicographic in the
    value tuples over the sorted element list.
    """
    if not omega.is_abelian():
        raise InputError("character construction requires an abelian group")
    if conductor % omega.exponent():
        raise InputError("conductor must be a multiple of the group exponent")
    gens = []
    span = {omega.identity}
    for e in omega.elements:
        if e not in span:
            gens.append(e)
            frontier = list(span)
            while frontier:
                x = frontier.pop()
                for g in gens:
                    y = omega.mul(x, g)
                    if y not in span:
                        span.add(y)
                        frontier.append(y)
    orders = [_element_order(omega, g) for g in gens]
    chars = []
    for ts in _iproduct(*(range(k) for k in orders)):
        images = [
            CyclotomicNumber.root_of_unity(conductor, (conductor // k) * t)
            for k, t in zip(orders, ts)
        ]
        chi = {omega.identity: CyclotomicNumber.one(conductor)}
        frontier = [omega.identity]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for g, val in zip(gens, images):
                y = omega.mul(x, g)
                yval = chi[x] * val
                if y in chi:
                    if chi[y] != yval:
                        ok = False
                        break
                else:
                    chi[y] = yval
                    frontier.append(y)
        if ok and len(chi) == omega.order:
            chars.append(chi)
    if len(chars) != omega.order:
        raise InvariantViolation("abelian character construction failed")
    chars.sort(key=lambda chi: tuple(chi[e].sort_key() for e in omega.elements))
    return chars


class Cocycle2:
    """Normalized 2-cocycle on a small group with root-of-unity values."""

    def __init__(self, group: GroupOps, values, conductor: int):
        self.group = group
        self.conductor = conductor
        self.values = dict(values)  # (a, b) -> CyclotomicNumber
        one = CyclotomicNumber.one(conductor)
        for a in group.elements:
            if self.values[(group.identity, a)] != one or \
               self.values[(a, group.identity)] != one:
                raise InputError("cocycle is not normalized")
        for a in group.elements:
            for b in group.elements:
                for c in group.elements:
                    lhs = self.values[(a, b)] * self.values[(group.mul(a, b), c)]
                    rhs = self.values[(b, c)] * self.values[(a, group.mul(b, c))]
                    if lhs != rhs:
                        raise InputError("2-cocycle identity fails")

    @classmethod
    def trivial(cls, group: GroupOps, conductor: int = 1) -> "Cocycle2":
        one = CyclotomicNumber.one(conductor)
        vals = {(a, b): one for a in group.elements for b in group.elements}
        return cls(group, vals, conductor)

    @classmethod
    def klein_nontrivial(cls, conductor: int = 4) -> "Cocycle2":
        """The nonsplit class on C2 x C2: alpha((a1,a2),(b1,b2)) = (-1)**(a2*b1)."""
        group = GroupOps.from_abelian(AbelianGroup([2, 2]))
        minus = CyclotomicNumber.from_rational(-1, conductor)
        one = CyclotomicNumber.one(conductor)
        vals = {
            (a, b): (minus if (a[1] * b[0]) % 2 else one)
            for a in group.elements for b in group.elements
        }
        return cls(group, vals, conductor)


class SCAlgebra:
    """Finite-dimensional associative algebra given by structure constants."""

    def __init__(self, labels, structure, unit, conductor,
                 check_associativity=True):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.conductor = conductor
        # structure: dict (i, j) -> tuple of (k, coeff)
        self.structure = structure
        self.unit = tuple(unit)
        if check_associativity:
            self.verify_unit()
            self.verify_associativity()

    # -- element helpers ----------------------------------------------

    def zero(self):
        return tuple(CyclotomicNumber.zero(self.conductor) for _ in range(self.dim))

    def basis_vector(self, i):
        z = CyclotomicNumber.zero(self.conductor)
        return tuple(
            CyclotomicNumber.one(self.conductor) if j == i else z
            for j in range(self.dim)
        )

    def multiply(self, x, y):
        acc = [CyclotomicNumber.zero(self.conductor) for _ in range(self.dim)]
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                coeff = xi * yj
                for k, c in self.structure.get((i, j), ()):
                    acc[k] = acc[k] + coeff * c
        return tuple(acc)

    def scale(self, x, scalar):
        return tuple(v * scalar for v in x)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def is_zero_vec(self, x):
        return all(v.is_zero() for v in x)

    # -- verification ----------------------------------------------------

    def verify_unit(self):
        for i in range(self.dim):
            b = self.basis_vector(i)
            if self.multiply(self.unit, b) != b or self.multiply(b, self.unit) != b:
                raise InvariantViolation("unit axioms fail")

    def verify_associativity(self):
        if self.dim <= ASSOC_FULL_CHECK_DIM:
            triples = _iproduct(range(self.dim), repeat=3)
        else:
            # deterministic sample on larger algebras
            step = max(1, self.dim // 16)
            idx = list(range(0, self.dim, step))
            triples = _iproduct(idx, repeat=3)
        for i, j, k in triples:
            a, b, c = (self.basis_vector(t) for t in (i, j, k))
            left = self.multiply(self.multiply(a, b), c)
            right = self.multiply(a, self.multiply(b, c))
            if left != right:
                raise InvariantViolation(
                    f"associativity fails on basis triple ({i},{j},{k})"
                )

    def center_dimension(self) -> int:
        """Dimension of the center, by exact nullspace computation."""
        rows = []
        for t in range(self.dim):
            b = self.basis_vector(t)
            # linear map x -> x*b_t - b_t*x, as dim x dim matrix columns
            for k in range(self.dim):
                row = []
                for j in range(self.dim):
                    x = self.basis_vector(j)
                    diff = self.sub(self.multiply(x, b), self.multiply(b, x))
                    row.append(diff[k])
                rows.append(row)
        return self.dim - _rank_cyclo(rows)

    def __repr__(self):
        return f"SCAlgebra(dim={self.dim})"


def _rank_cyclo(rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][c].inverse()
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _echelon_basis(vectors):
    """Reduced echelon basis of the span; returns (basis, pivot_columns)."""
    basis = []
    pivots = []
    for v in vectors:
        v = list(v)
        for bvec, piv in zip(basis, pivots):
            if not v[piv].is_zero():
                f = v[piv]
                v = [x - f * y for x, y in zip(v, bvec)]
        piv = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if piv is None:
            continue
        inv = v[piv].inverse()
        v = [x * inv for x in v]
        # back-substitute into earlier rows
        for t, (bvec, bp) in enumerate(zip(basis, pivots)):
            if not bvec[piv].is_zero():
                f = bvec[piv]
                basis[t] = [x - f * y for x, y in zip(bvec, v)]
        basis.append(v)
        pivots.append(piv)
    order = sorted(range(len(basis)), key=lambda t: pivots[t])
    return [tuple(basis[t]) for t in order], [pivots[t] for t in order]


def _coords_in_basis(v, basis, pivots):
    v = list(v)
    coords = []
    for bvec, piv in zip(basis, pivots):
        c = v[piv]
        coords.append(c)
        if not c.is_zero():
            v = [x - c * y for x, y in zip(v, bvec)]
    if any(not x.is_zero() for x in v):
        raise InvariantViolation("vector does not lie in the subspace")
    return coords


# -- constructions ---------------------------------------------------------


def twisted_group_algebra(omega: GroupOps, alpha: Cocycle2) -> SCAlgebra:
    """Basis [w] with [w][h] = alpha(w, h) [w h]."""
    if alpha.group is not omega and alpha.group.elements != omega.elements:
        raise InputError("cocycle lives on a different group")
    conductor = alpha.conductor
    labels = [f"[{e}]" for e in omega.elements]
    structure = {}
    for i, a in enumerate(omega.elements):
        for j, b in enumerate(omega.elements):
            k = omega.index[omega.mul(a, b)]
            structure[(i, j)] = ((k, alpha.values[(a, b)]),)
    unit = [CyclotomicNumber.zero(conductor)] * omega.order
    unit[omega.index[omega.identity]] = CyclotomicNumber.one(conductor)
    return SCAlgebra(labels, structure, unit, conductor)


def skew_group_algebra(omega: GroupOps, weyl: GroupOps, action) -> SCAlgebra:
    """Basis [w][x] for w in Omega, x in W; relations [x][w] = [x . w][x].

    `action(x, w)` is the automorphism of Omega attached to x, applied to w.
    The action is verified: every x acts as an automorphism and the
    assignment is a homomorphism from W.
    """
    for x in weyl.elements:
        seen = set()
        for a in omega.elements:
            img = action(x, a)
            if img not in omega.index:
                raise InputError("action leaves the group")
            seen.add(img)
            for b in omega.elements:
                if action(x, omega.mul(a, b)) != omega.mul(img, action(x, b)):
                    raise InputError("action image is not multiplicative")
        if len(seen) != omega.order:
            raise InputError("action image is not bijective")
    for x in weyl.elements:
        for y in weyl.elements:
            xy = weyl.mul(x, y)
            for a in omega.elements:
                if action(xy, a) != action(x, action(y, a)):
                    raise InputError("action is not a homomorphism from W")

    conductor = lcm(omega.exponent(), 1)
    labels = []
    pairs = []
    for a in omega.elements:
        for x in weyl.elements:
            labels.append(f"[{a}|{x}]")
            pairs.append((a, x))
    index = {p: i for i, p in enumerate(pairs)}
    one = CyclotomicNumber.one(conductor)
    structure = {}
    for i, (a, x) in enumerate(pairs):
        for j, (b, y) in enumerate(pairs):
            target = (omega.mul(a, action(x, b)), weyl.mul(x, y))
            structure[(i, j)] = ((index[target], one),)
    unit = [CyclotomicNumber.zero(conductor)] * len(pairs)
    unit[index[(omega.identity, weyl.identity)]] = one
    return SCAlgebra(labels, structure, unit, conductor)


def central_idempotents_abelian(omega: GroupOps, algebra: SCAlgebra | None = None,
                                conductor: int | None = None):
    """The idempotents e_eta = (1/|Omega|) sum_w eta(w)**-1 [w] of C[Omega].

    When `algebra` is a skew product C[Omega] x| W, the idempotents are
    returned as vectors in it (supported on the [w | identity] basis).

    Returns (characters, idempotent_vectors).
    """
    if conductor is None:
        conductor = algebra.conductor if algebra else omega.exponent()
    chars = abelian_characters(omega, conductor)
    scale = Fraction(1, omega.order)
    vectors = []
    for eta in chars:
        if algebra is None:
            vec = [CyclotomicNumber.zero(conductor) for _ in omega.elements]
            for i, w in enumerate(omega.elements):
                vec[i] = eta[omega.inv(w)] * scale
        else:
            # skew basis is ordered (omega element, weyl element) with the
            # weyl identity at offset 0 of each block
            vec = list(algebra.zero())
            per_w = algebra.dim // omega.order
            for oi, w in enumerate(omega.elements):
                vec[oi * per_w] = eta[omega.inv(w)] * scale
        vectors.append(tuple(vec))
    return chars, vectors


def corner(algebra: SCAlgebra, e) -> tuple[SCAlgebra, list, list]:
    """The corner eAe with basis extracted by exact row reduction.

    Returns (corner_algebra, basis_vectors, pivots); the corner's unit is e.
    """
    if algebra.multiply(e, e) != tuple(e):
        raise InputError("e is not idempotent")
    spanning = []
    for i in range(algebra.dim):
        v = algebra.multiply(algebra.multiply(e, algebra.basis_vector(i)), e)
        if not algebra.is_zero_vec(v):
            spanning.append(v)
    basis, pivots = _echelon_basis(spanning)
    structure = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            prod = algebra.multiply(bi, bj)
            coords = _coords_in_basis(prod, basis, pivots)
            structure[(i, j)] = tuple(
                (k, c) for k, c in enumerate(coords) if not c.is_zero()
            )
    unit_coords = _coords_in_basis(tuple(e), basis, pivots)
    labels = [f"e*{algebra.labels[p]}*e" for p in pivots]
    sub = SCAlgebra(labels, structure, unit_coords, algebra.conductor)
    return sub, basis, pivots


def left_ideal_dimension(algebra: SCAlgebra, e) -> int:
    """dim A*e (exact)."""
    vectors = [algebra.multiply(algebra.basis_vector(i), e)
               for i in range(algebra.dim)]
    basis, _p = _echelon_basis([v for v in vectors if not algebra.is_zero_vec(v)])
    return len(basis)


def skew_corner_report(omega: GroupOps, weyl: GroupOps, action,
                       eta_index: int) -> dict:
    """Corner of the skew group algebra at the eta-th central idempotent of
    C[Omega], with the group-law isomorphism onto C[Stab_W(eta)] verified
    basis-element-wise."""
    A = skew_group_algebra(omega, weyl, action)
    chars, idems = central_idempotents_abelian(omega, algebra=A)
    if not 0 <= eta_index < len(chars):
        raise InputError(f"eta index out of range 0..{len(chars) - 1}")
    eta = chars[eta_index]
    e = idems[eta_index]

    stab = [x for x in weyl.elements
            if all(eta[action(x, w)] == eta[w] for w in omega.elements)]
    orbit_size = weyl.order // len(stab)

    sub, basis, pivots = corner(A, e)

    # T_x := e [identity | x] e; group law T_x T_y = T_{xy}
    per_w = A.dim // omega.order
    ident_block = omega.index[omega.identity] * per_w
    group_law = True
    ts = {}
    for x in stab:
        bx = A.basis_vector(ident_block + weyl.index[x])
        ts[x] = A.multiply(A.multiply(e, bx), e)
    for x in stab:
        for y in stab:
            lhs = A.multiply(ts[x], ts[y])
            if lhs != ts[weyl.mul(x, y)]:
                group_law = False
    tbasis, _tp = _echelon_basis(list(ts.values()))
    independent = len(tbasis) == len(stab)

    return {
        "eta_index": eta_index,
        "eta_values": [str(eta[w]) for w in omega.elements],
        "corner_dim": sub.dim,
        "stabilizer_order": len(stab),
        "orbit_size": orbit_size,
        "group_law_holds": group_law,
        "basis_independent": independent,
        "isomorphic_to_group_algebra": group_law and independent
        and sub.dim == len(stab),
        "algebra_dim": A.dim,
        "left_ideal_dim": left_ideal_dimension(A, e),
    }
