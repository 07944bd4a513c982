"""Exact complex character tables and class-function calculus.

Tables are computed with the Burnside-Dixon method: the class-multiplication
matrices are simultaneously diagonalized over a prime field F_p with
p = 1 (mod exp G), and the resulting characters mod p are lifted to exact
cyclotomic values through eigenvalue-multiplicity discrete Fourier sums.

All class-function values are CyclotomicNumbers at the group-exponent
conductor.  Inner products, induction, restriction and inflation are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .cyclo import CyclotomicNumber
from .errors import CapacityError, InputError, InvariantViolation
from .perm import PermGroup, GroupHom, perm_order, pinv, pmul

KIND_VIRTUAL = "virtual"
KIND_CHARACTER = "character"
KIND_IRREDUCIBLE = "irreducible"


class ClassFunction:
    """A class function on a fixed group, one exact value per conjugacy class."""

    __slots__ = ("group", "values", "kind")

    def __init__(self, group: PermGroup, values, kind: str = KIND_VIRTUAL):
        self.group = group
        vals = tuple(values)
        if len(vals) != len(group.conjugacy_classes()):
            raise InputError("wrong number of class-function values")
        self.values = vals
        self.kind = kind

    # -- basics ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash(self.values)

    def __call__(self, g) -> CyclotomicNumber:
        return self.values[self.group.class_index(tuple(g))]

    def degree(self) -> CyclotomicNumber:
        return self.values[0]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"ClassFunction[{self.kind}]({vals})"

    # -- arithmetic -------------------------------------------------------

    def _combine(self, other, op):
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise InputError("class functions live on different groups")
        return ClassFunction(
            self.group,
            tuple(op(a, b) for a, b in zip(self.values, other.values)),
            KIND_VIRTUAL,
        )

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return ClassFunction(
                self.group, tuple(v * scalar for v in self.values), KIND_VIRTUAL
            )
        return NotImplemented

    __rmul__ = __mul__

    def tensor(self, other) -> "ClassFunction":
        return self._combine(other, lambda a, b: a * b)

    def conjugate_by(self, a) -> "ClassFunction":
        """The class function x -> f(a**-1 x a); a must normalize the group."""
        G = self.group
        ai = pinv(tuple(a))
        vals = []
        for rep, _size in G.conjugacy_classes():
            x = pmul(pmul(ai, rep), tuple(a))
            if x not in G:
                raise InputError("conjugator does not normalize the group")
            vals.append(self.values[G.class_index(x)])
        return ClassFunction(G, vals, self.kind)

    def is_nonnegative_integral(self) -> bool:
        """All values rational nonnegative integers (used for containment tests)."""
        for v in self.values:
            if not v.is_rational():
                return False
            f = v.to_fraction()
            if f.denominator != 1 or f < 0:
                return False
        return True


def inner_product(f: ClassFunction, g: ClassFunction) -> CyclotomicNumber:
    """<f, g> = (1/|G|) sum_x f(x) conj(g(x)), computed classwise; exact."""
    if f.group is not g.group:
        raise InputError("inner product requires a common group")
    G = f.group
    total = CyclotomicNumber.zero(group_conductor(G))
    for (rep, size), a, b in zip(G.conjugacy_classes(), f.values, g.values):
        total = total + a * b.conjugate() * size
    return total * Fraction(1, G.order)


def inner_product_int(f: ClassFunction, g: ClassFunction) -> int:
    value = inner_product(f, g)
    return value.to_int()


def group_conductor(G: PermGroup) -> int:
    cond = getattr(G, "_conductor", None)
    if cond is None:
        cond = G.exponent()
        G._conductor = cond
    return cond


# ---------------------------------------------------------------------------
# mod-p linear algebra for the Dixon method
# ---------------------------------------------------------------------------


def _charpoly_mod(A, p):
    """Characteristic polynomial of A over F_p (monic, low-to-high coeffs)."""
    n = len(A)
    H = [[x % p for x in row] for row in A]
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if H[r][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[piv], H[c + 1] = H[c + 1], H[piv]
            for row in H:
                row[piv], row[c + 1] = row[c + 1], row[piv]
        inv = pow(H[c + 1][c], p - 2, p)
        for r in range(c + 2, n):
            f = H[r][c] * inv % p
            if f:
                Hc1 = H[c + 1]
                Hr = H[r]
                for k in range(n):
                    Hr[k] = (Hr[k] - f * Hc1[k]) % p
                for k in range(n):
                    H[k][c + 1] = (H[k][c + 1] + f * H[k][r]) % p
    # recurrence over leading principal minors of the Hessenberg form
    polys = [[1]]
    for m in range(1, n + 1):
        d = H[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for i, c in enumerate(prev):  # (x - d) * prev
            cur[i + 1] = (cur[i + 1] + c) % p
            cur[i] = (cur[i] - d * c) % p
        run = 1
        for i in range(1, m):
            run = run * H[m - i][m - i - 1] % p
            coef = H[m - 1 - i][m - 1] * run % p
            if coef:
                for j, c in enumerate(polys[m - 1 - i]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[n]


def _poly_roots_mod(poly, p):
    """All roots in F_p, ascending (with multiplicity collapsed)."""
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _kernel_mod(A, p):
    """Basis of the nullspace of A over F_p (deterministic echelon form)."""
    n = len(A)
    M = [[x % p for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-M[i][fc]) % p
        basis.append(v)
    return basis


def _matvec_mod(A, v, p):
    return [sum(a * x for a, x in zip(row, v)) % p for row in A]


def _restrict_to_subspace(M, basis, p):
    """Matrix of M on the invariant subspace spanned by `basis` columns."""
    r = len(basis[0])
    d = len(basis)
    # augmented system [B | M b_1 | ... | M b_d]
    rows = [[basis[j][i] for j in range(d)] +
            [sum(M[i][k] * basis[j][k] for k in range(r)) % p for j in range(d)]
            for i in range(r)]
    pivots = []
    rr = 0
    for c in range(d):
        piv = next((i for i in range(rr, r) if rows[i][c] % p), None)
        if piv is None:
            raise InvariantViolation("subspace basis is degenerate")
        rows[rr], rows[piv] = rows[piv], rows[rr]
        inv = pow(rows[rr][c], p - 2, p)
        rows[rr] = [x * inv % p for x in rows[rr]]
        for i in range(r):
            if i != rr and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rr])]
        pivots.append(c)
        rr += 1
    for i in range(rr, r):
        if any(x % p for x in rows[i][d:]):
            raise InvariantViolation("subspace is not invariant")
    # column j of the restricted matrix sits in the pivot rows
    A = [[rows[i][d + j] for j in range(d)] for i in range(d)]
    return A


def _smallest_primitive_root(p):
    from .primes import factorize

    fac = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ArithmeticError("no primitive root found")


def _dixon_prime(exponent, order):
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    from .primes import is_prime

    bound = 2 * isqrt(order) + 1
    k = 1
    while True:
        p = exponent * k + 1
        if p > bound and is_prime(p):
            return p
        k += 1


# ---------------------------------------------------------------------------
# the table itself
# ---------------------------------------------------------------------------


class CharTable:
    """Complete exact character table, rows ordered by (degree, values)."""

    def __init__(self, group: PermGroup):
        self.group = group
        self.classes = group.conjugacy_classes()
        self.conductor = group_conductor(group)
        self.rows = self._dixon()
        self._row_index = {row.values: i for i, row in enumerate(self.rows)}

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i) -> ClassFunction:
        return self.rows[i]

    def degrees(self) -> list[int]:
        return [row.degree().to_int() for row in self.rows]

    def index_of(self, f: ClassFunction) -> int | None:
        return self._row_index.get(f.values)

    def decompose(self, f: ClassFunction) -> list[int]:
        """Multiplicities of f against the irreducible rows; exact integers."""
        out = []
        for row in self.rows:
            v = inner_product(f, row)
            if not v.is_rational() or v.to_fraction().denominator != 1:
                raise InvariantViolation("non-integral multiplicity")
            out.append(v.to_int())
        return out

    def constituents(self, f: ClassFunction) -> list[tuple[int, int]]:
        return [(i, m) for i, m in enumerate(self.decompose(f)) if m]

    # -- Dixon machine ---------------------------------------------------

    def _dixon(self) -> tuple[ClassFunction, ...]:
        G = self.group
        classes = self.classes
        r = len(classes)
        n = G.order
        if r > 512:
            raise CapacityError("more than 512 conjugacy classes")
        class_of = G.class_map()
        reps = [rep for rep, _ in classes]
        sizes = [size for _, size in classes]
        exponent = self.conductor
        p = _dixon_prime(exponent, n)

        elements_by_class = [[] for _ in range(r)]
        for g in G.elements():
            elements_by_class[class_of[g]].append(g)

        inverse_class = [class_of[pinv(rep)] for rep in reps]

        def class_matrix(i):
            M = [[0] * r for _ in range(r)]
            for k in range(r):
                zk = reps[k]
                for x in elements_by_class[i]:
                    j = class_of[pmul(pinv(x), zk)]
                    M[j][k] += 1
            return M

        # simultaneous eigenspace splitting over F_p; each space is a list
        # of basis vectors of length r
        spaces = [[[1 if i == k else 0 for i in range(r)] for k in range(r)]]
        for i in range(1, r):
            if all(len(s) == 1 for s in spaces):
                break
            Mi = class_matrix(i)
            new_spaces = []
            for basis in spaces:
                if len(basis) == 1:
                    new_spaces.append(basis)
                    continue
                A = _restrict_to_subspace(Mi, basis, p)
                d = len(A)
                roots = _poly_roots_mod(_charpoly_mod(A, p), p)
                total = 0
                for lam in roots:
                    Ashift = [[(A[x][y] - (lam if x == y else 0)) % p
                               for y in range(d)] for x in range(d)]
                    eigen = []
                    for kv in _kernel_mod(Ashift, p):
                        eigen.append(
                            [sum(kv[j] * basis[j][t] for j in range(d)) % p
                             for t in range(r)]
                        )
                    total += len(eigen)
                    new_spaces.append(eigen)
                if total != d:
                    raise InvariantViolation("eigenspace split lost dimensions")
            spaces = new_spaces
        if any(len(s) != 1 for s in spaces):
            raise InvariantViolation("class matrices did not split the algebra")

        # recover characters mod p, then lift
        ginv = pow(n % p, p - 2, p)
        size_inv = [pow(s % p, p - 2, p) for s in sizes]
        half = p // 2
        omegas = []
        for (vec,) in spaces:
            if vec[0] == 0:
                raise InvariantViolation("eigenvector vanishes at the identity")
            scale = pow(vec[0], p - 2, p)
            omegas.append([x * scale % p for x in vec])

        z = _smallest_primitive_root(p)
        table_mod = []
        degrees = []
        for u in omegas:
            s = 0
            for k in range(r):
                s = (s + u[k] * u[inverse_class[k]] * size_inv[k]) % p
            d2 = n % p * pow(s, p - 2, p) % p
            droot = None
            for d in range(1, half + 1):
                if d * d % p == d2:
                    droot = d
                    break
            if droot is None:
                raise InvariantViolation("degree is not a square mod p")
            degrees.append(droot)
            table_mod.append([droot * u[k] % p * size_inv[k] % p for k in range(r)])
        if sum(d * d for d in degrees) != n:
            raise InvariantViolation("sum of squared degrees != |G|")

        power_class = []
        for rep in reps:
            e = perm_order(rep)
            row = []
            g = G.identity
            for _t in range(e):
                row.append(class_of[g])
                g = pmul(g, rep)
            power_class.append(row)

        rows = []
        for chi_p, d in zip(table_mod, degrees):
            values = []
            for k in range(r):
                e = len(power_class[k])
                if e == 1:
                    values.append(CyclotomicNumber.from_rational(d, exponent))
                    continue
                om = pow(z, (p - 1) // e, p)
                ominv = pow(om, p - 2, p)
                einv = pow(e, p - 2, p)
                mults = []
                for j in range(e):
                    acc = 0
                    w = pow(ominv, j, p)
                    cur = 1
                    for t in range(e):
                        acc = (acc + chi_p[power_class[k][t]] * cur) % p
                        cur = cur * w % p
                    m = acc * einv % p
                    if m > d:
                        raise InvariantViolation("eigenvalue multiplicity out of range")
                    mults.append(m)
                if sum(mults) != d:
                    raise InvariantViolation("multiplicities do not sum to degree")
                values.append(
                    CyclotomicNumber.from_root_multiplicities(exponent, e, mults)
                )
            rows.append(ClassFunction(self.group, values, KIND_IRREDUCIBLE))
        rows.sort(key=lambda row: (row.degree().to_int(), row.sort_key()))
        return tuple(rows)

    # -- rendering ---------------------------------------------------------

    def to_tsv(self) -> str:
        lines = []
        header = ["#chi"] + [
            f"({perm_order(rep)},{size})" for rep, size in self.classes
        ]
        lines.append("\t".join(header))
        for i, row in enumerate(self.rows):
            lines.append("\t".join([f"X{i}"] + [str(v) for v in row.values]))
        return "\n".join(lines)


def character_table(G: PermGroup) -> CharTable:
    table = getattr(G, "_char_table", None)
    if table is None:
        table = CharTable(G)
        G._char_table = table
    return table


# ---------------------------------------------------------------------------
# transport: induction, restriction, inflation
# ---------------------------------------------------------------------------


def class_fusion(H: PermGroup, G: PermGroup) -> list[int]:
    """For each H-class, the index of the G-class containing it."""
    if not G.is_subgroup(H):
        raise InputError("not a subgroup")
    gmap = G.class_map()
    return [gmap[rep] for rep, _ in H.conjugacy_classes()]


def induce(chi: ClassFunction, G: PermGroup) -> ClassFunction:
    """Induced class function Ind_H^G chi; exact, via class fusion."""
    H = chi.group
    fusion = class_fusion(H, G)
    nG = group_conductor(G)
    gclasses = G.conjugacy_classes()
    acc = [CyclotomicNumber.zero(nG) for _ in gclasses]
    for (hrep, hsize), hval, k in zip(H.conjugacy_classes(), chi.values, fusion):
        acc[k] = acc[k] + hval.promote(nG) * Fraction(hsize, H.order)
    vals = []
    for (grep, gsize), a in zip(gclasses, acc):
        vals.append(a * Fraction(G.order, gsize))
    kind = KIND_CHARACTER if chi.kind in (KIND_CHARACTER, KIND_IRREDUCIBLE) else KIND_VIRTUAL
    return ClassFunction(G, vals, kind)


def restrict(chi: ClassFunction, H: PermGroup) -> ClassFunction:
    """Restriction of chi to the subgroup H, values at H's conductor."""
    G = chi.group
    fusion = class_fusion(H, G)
    nH = group_conductor(H)
    vals = [chi.values[k].retract(nH) for k in fusion]
    kind = chi.kind if chi.kind != KIND_IRREDUCIBLE else KIND_CHARACTER
    return ClassFunction(H, vals, kind)


def inflate(chi: ClassFunction, hom: GroupHom) -> ClassFunction:
    """Inflation along a surjection hom: G -> Q of a class function on Q."""
    G, Q = hom.source, hom.target
    if chi.group is not Q:
        raise InputError("class function does not live on the hom target")
    if hom.image().order != Q.order:
        raise InputError("inflation requires a surjective homomorphism")
    nG = group_conductor(G)
    vals = []
    for rep, _size in G.conjugacy_classes():
        vals.append(chi.values[Q.class_index(hom(rep))].promote(nG))
    kind = chi.kind if chi.kind != KIND_IRREDUCIBLE else KIND_CHARACTER
    return ClassFunction(G, vals, kind)


def regular_character(G: PermGroup) -> ClassFunction:
    n = group_conductor(G)
    vals = [CyclotomicNumber.from_rational(G.order if size == 1 and rep == G.identity else 0, n)
            for rep, size in G.conjugacy_classes()]
    return ClassFunction(G, vals, KIND_CHARACTER)


def trivial_character(G: PermGroup) -> ClassFunction:
    n = group_conductor(G)
    one = CyclotomicNumber.one(n)
    return ClassFunction(G, [one] * len(G.conjugacy_classes()), KIND_IRREDUCIBLE)
