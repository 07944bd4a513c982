"""Finite groups as permutation groups.

Permutations are tuples of images on 0..degree-1, composed left-to-right:
(a * b)(x) = b(a(x)).  Cycle notation in input/output is 1-based.

PermGroup carries a stabilizer chain (base and strong generating set built
by a deterministic Schreier-Sims), from which order, membership and element
enumeration are derived.  Everything is immutable after construction; all
queries are pure.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product as _iproduct
from math import lcm

from .errors import CapacityError, InputError, InvariantViolation

# default enumeration bound for class/element listings
ENUMERATION_BOUND = 10**7
CLASS_BOUND = 512


# -- raw permutation helpers -------------------------------------------------


def pmul(a: tuple, b: tuple) -> tuple:
    """Compose left-to-right: apply a, then b."""
    return tuple(b[x] for x in a)


def pinv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def pconj(a: tuple, g: tuple) -> tuple:
    """a conjugated by g: g**-1 * a * g."""
    return pmul(pmul(pinv(g), a), g)


def identity_perm(degree: int) -> tuple:
    return tuple(range(degree))


def perm_order(a: tuple) -> int:
    seen = [False] * len(a)
    order = 1
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        order = lcm(order, length)
    return order


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> tuple:
    """Parse 1-based cycle notation like '(1 2 3)(4 5)'; '()' is the identity."""
    text = text.strip()
    if text in ("", "()"):
        return identity_perm(degree)
    consumed = _CYCLE_RE.sub("", text).replace(",", "").strip()
    if consumed:
        raise InputError(f"malformed permutation {text!r}")
    images = list(range(degree))
    for cyc in _CYCLE_RE.findall(text):
        pts = [int(t) - 1 for t in re.split(r"[,\s]+", cyc.strip()) if t]
        if not pts:
            continue
        if any(p < 0 or p >= degree for p in pts):
            raise InputError(f"point out of range 1..{degree} in {text!r}")
        if len(set(pts)) != len(pts):
            raise InputError(f"repeated point in cycle {cyc!r}")
        for i, p in enumerate(pts):
            images[p] = pts[(i + 1) % len(pts)]
    # cycles in one string are disjoint in our files; verify bijectivity anyway
    if sorted(images) != list(range(degree)):
        raise InputError(f"cycles in {text!r} are not disjoint")
    return tuple(images)


def format_perm(a: tuple) -> str:
    cycles = []
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i] or a[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = a[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        cycles.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(cycles) if cycles else "()"


# -- stabilizer chain ---------------------------------------------------------


class _Level:
    __slots__ = ("base", "gens", "transversal", "orbit")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[tuple] = []
        self.transversal: dict[int, tuple] = {base: identity_perm(degree)}
        self.orbit: list[int] = [base]


class StabChain:
    """Deterministic incremental Schreier-Sims."""

    def __init__(self, degree: int, gens):
        self.degree = degree
        self.identity = identity_perm(degree)
        self.levels: list[_Level] = []
        for g in gens:
            self._augment(g)

    def sift(self, g: tuple):
        """Return (residue, level index at which sifting stopped)."""
        for i, lvl in enumerate(self.levels):
            x = g[lvl.base]
            u = lvl.transversal.get(x)
            if u is None:
                return g, i
            g = pmul(g, pinv(u))
        return g, len(self.levels)

    def contains(self, g: tuple) -> bool:
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return h == self.identity

    def _augment(self, g: tuple):
        stack = [g]
        while stack:
            h, i = self.sift(stack.pop())
            if h == self.identity:
                continue
            if i == len(self.levels):
                base = min(p for p in range(self.degree) if h[p] != p)
                self.levels.append(_Level(base, self.degree))
            # h fixes the bases of levels < i, so it is a strong generator
            # for every level up to i
            for j in range(i + 1):
                self.levels[j].gens.append(h)
                stack.extend(self._rebuild_orbit(j))

    def _rebuild_orbit(self, j: int) -> list[tuple]:
        """Recompute level j's orbit; return its nontrivial Schreier generators."""
        lvl = self.levels[j]
        lvl.transversal = {lvl.base: self.identity}
        lvl.orbit = [lvl.base]
        out = []
        queue = 0
        while queue < len(lvl.orbit):
            p = lvl.orbit[queue]
            queue += 1
            up = lvl.transversal[p]
            for s in lvl.gens:
                q = s[p]
                uq = lvl.transversal.get(q)
                if uq is None:
                    lvl.transversal[q] = pmul(up, s)
                    lvl.orbit.append(q)
                else:
                    schreier = pmul(pmul(up, s), pinv(uq))
                    if schreier != self.identity:
                        out.append(schreier)
        return out

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def element_words(self):
        """Iterate all elements as products of transversal representatives.

        An element factors uniquely as u_{k-1} * ... * u_1 * u_0 (deepest
        level first) with u_i from level i's transversal.
        """
        transversals = [
            [lvl.transversal[p] for p in sorted(lvl.transversal)]
            for lvl in self.levels
        ]
        if not transversals:
            yield self.identity
            return
        for combo in _iproduct(*transversals):
            g = combo[-1]
            for u in reversed(combo[:-1]):
                g = pmul(g, u)
            yield g


class PermGroup:
    """Finite permutation group on 0..degree-1 with derived chain data."""

    def __init__(self, degree: int, generators, _parent: "PermGroup | None" = None):
        self.degree = degree
        gens = []
        seen = set()
        ident = identity_perm(degree)
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise InputError(f"not a permutation of degree {degree}: {g}")
            if g != ident and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self.identity = ident
        self.chain = StabChain(degree, gens)
        self._parent = _parent
        self._elements: tuple | None = None
        self._classes = None
        self._class_of = None
        self._table = None

    # -- basics --------------------------------------------------------

    @property
    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g) -> bool:
        return self.chain.contains(tuple(g))

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def elements(self, bound: int | None = None) -> tuple:
        """All elements, sorted lexicographically by image tuple."""
        if self._elements is None:
            if bound is None:
                bound = ENUMERATION_BOUND
            if self.order > bound:
                raise CapacityError(
                    f"group order {self.order} exceeds enumeration bound {bound}"
                )
            out = set()
            for g in self.chain.element_words():
                out.add(g)
            if len(out) != self.order:
                raise InvariantViolation(
                    "stabilizer chain order does not match enumerated elements"
                )
            self._elements = tuple(sorted(out))
        return self._elements

    def is_subgroup(self, other: "PermGroup") -> bool:
        """Is `other` a subgroup of self (same degree)?"""
        return other.degree == self.degree and all(
            g in self for g in other.generators
        )

    def subgroup(self, gens) -> "PermGroup":
        H = PermGroup(self.degree, gens, _parent=self)
        if not self.is_subgroup(H):
            raise InputError("generators do not lie in the ambient group")
        return H

    def is_normal(self, N: "PermGroup") -> bool:
        if not self.is_subgroup(N):
            return False
        for g in self.generators:
            for n in N.generators:
                if pconj(n, g) not in N:
                    return False
        return True

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(
            pmul(a, b) == pmul(b, a) for i, a in enumerate(gs) for b in gs[i:]
        )

    def exponent(self) -> int:
        e = 1
        for rep, _size in self.conjugacy_classes():
            e = lcm(e, perm_order(rep))
        return e

    # -- conjugacy classes ----------------------------------------------

    def conjugacy_classes(self, bound: int | None = None):
        """Ordered classes [(representative, size)]; deterministic.

        Ordering: (element order, class size, minimal image tuple of the
        class).  The representative is the minimal element of its class.
        """
        if self._classes is None:
            elements = self.elements(bound)
            geninv = [(g, pinv(g)) for g in self.generators]
            unseen = dict.fromkeys(elements)
            raw = []
            for x in elements:
                if x not in unseen:
                    continue
                orbit = {x}
                queue = [x]
                del unseen[x]
                while queue:
                    y = queue.pop()
                    for g, gi in geninv:
                        z = pmul(pmul(gi, y), g)
                        if z not in orbit:
                            orbit.add(z)
                            if z in unseen:
                                del unseen[z]
                            queue.append(z)
                rep = min(orbit)
                raw.append((perm_order(rep), len(orbit), rep, orbit))
            raw.sort(key=lambda t: (t[0], t[1], t[2]))
            if len(raw) > CLASS_BOUND:
                raise CapacityError(f"more than {CLASS_BOUND} conjugacy classes")
            self._classes = tuple((rep, size) for _o, size, rep, _orb in raw)
            class_of = {}
            for idx, (_o, _s, _rep, orbit) in enumerate(raw):
                for y in orbit:
                    class_of[y] = idx
            self._class_of = class_of
            if sum(s for _r, s in self._classes) != self.order:
                raise InvariantViolation("class sizes do not sum to |G|")
        return self._classes

    def class_index(self, g: tuple) -> int:
        self.conjugacy_classes()
        return self._class_of[tuple(g)]

    def class_map(self) -> dict:
        self.conjugacy_classes()
        return self._class_of

    def centralizer_order(self, class_idx: int) -> int:
        classes = self.conjugacy_classes()
        return self.order // classes[class_idx][1]

    # -- constructions ---------------------------------------------------

    def centralizer(self, x: tuple) -> "PermGroup":
        elems = [g for g in self.elements() if pmul(g, x) == pmul(x, g)]
        return _from_element_list(self.degree, elems)

    def normalizer(self, H: "PermGroup") -> "PermGroup":
        gens_H = H.generators
        elems = []
        for g in self.elements():
            if all(pconj(h, g) in H for h in gens_H):
                elems.append(g)
        return _from_element_list(self.degree, elems)

    def conjugate_subgroup(self, H: "PermGroup", g: tuple) -> "PermGroup":
        return PermGroup(self.degree, [pconj(h, g) for h in H.generators])

    def right_transversal(self, H: "PermGroup") -> list[tuple]:
        """Deterministic coset representatives for H\\G (cosets Hg)."""
        helems = H.elements()
        seen = set()
        reps = []
        for g in self.elements():
            if g in seen:
                continue
            reps.append(g)
            for h in helems:
                seen.add(pmul(h, g))
        return reps

    def intersection(self, other: "PermGroup") -> "PermGroup":
        small, big = sorted((self, other), key=lambda G: G.order)
        elems = [g for g in small.elements() if g in big]
        return _from_element_list(self.degree, elems)

    def join(self, other: "PermGroup") -> "PermGroup":
        return PermGroup(self.degree, self.generators + other.generators)

    def quotient(self, N: "PermGroup"):
        """Return (Q, hom) where Q is M/N realized on the cosets of N.

        N must be normal; the quotient acts faithfully on the coset space
        (regular action of M/N), so Q carries full class/character data.
        """
        if not self.is_normal(N):
            raise InputError("subgroup is not normal")
        reps = self.right_transversal(N)
        nelems = N.elements()
        coset_id = {}
        for i, r in enumerate(reps):
            for h in nelems:
                coset_id[pmul(h, r)] = i
        def induced(g):
            return tuple(coset_id[pmul(r, g)] for r in reps)
        Q = PermGroup(len(reps), [induced(g) for g in self.generators])
        hom = GroupHom(self, Q, {g: induced(g) for g in self.generators})
        return Q, hom

    def trivial_subgroup(self) -> "PermGroup":
        return PermGroup(self.degree, [])


def _from_element_list(degree: int, elems) -> PermGroup:
    """Group generated by a set known to be closed; grow generators greedily."""
    G = PermGroup(degree, [])
    target = len(elems)
    for g in elems:
        if g not in G:
            G = PermGroup(degree, G.generators + (g,))
            if G.order == target:
                break
    if G.order != target:
        raise InvariantViolation("element list was not closed under products")
    return G


def group_from_generators(degree: int, gen_strings) -> PermGroup:
    """Build a group from 1-based cycle-notation generator strings."""
    return PermGroup(degree, [parse_perm(s, degree) for s in gen_strings])


# -- homomorphisms -----------------------------------------------------------


class GroupHom:
    """Homomorphism between finite groups, materialized on all elements.

    Built by BFS over the Cayley graph of the source; every edge is checked
    for consistency, so a successfully constructed GroupHom is verified
    multiplicative on the whole group.
    """

    def __init__(self, source: PermGroup, target: PermGroup, gen_images: dict):
        self.source = source
        self.target = target
        self.gen_images = dict(gen_images)
        table = {source.identity: target.identity}
        frontier = [source.identity]
        pairs = [(g, self.gen_images[g]) for g in source.generators]
        while frontier:
            nxt = []
            for x in frontier:
                fx = table[x]
                for g, fg in pairs:
                    y = pmul(x, g)
                    fy = pmul(fx, fg)
                    old = table.get(y)
                    if old is None:
                        table[y] = fy
                        nxt.append(y)
                    elif old != fy:
                        raise InputError(
                            "generator images do not define a homomorphism"
                        )
            frontier = nxt
        if len(table) != source.order:
            raise InvariantViolation("BFS did not cover the source group")
        self.table = table

    def __call__(self, g: tuple) -> tuple:
        return self.table[tuple(g)]

    def kernel(self) -> PermGroup:
        elems = sorted(g for g, fg in self.table.items()
                       if fg == self.target.identity)
        return _from_element_list(self.source.degree, elems)

    def image(self) -> PermGroup:
        return PermGroup(self.target.degree, list(self.gen_images.values()))


# -- abstract abelian groups (acting parts of semidirect products) ------------


class AbelianGroup:
    """Direct product of cyclic groups C_{n1} x ... x C_{nk}; elements are
    exponent tuples."""

    def __init__(self, orders):
        self.orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in self.orders):
            raise InputError("cyclic orders must be >= 1")

    @property
    def order(self) -> int:
        n = 1
        for m in self.orders:
            n *= m
        return n

    @property
    def identity(self):
        return (0,) * len(self.orders)

    def elements(self):
        return sorted(_iproduct(*(range(n) for n in self.orders)))

    def mul(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def inv(self, a):
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def generators(self):
        gens = []
        for i, n in enumerate(self.orders):
            if n > 1:
                gens.append(tuple(1 if j == i else 0 for j in range(len(self.orders))))
        return gens

    def exponent(self) -> int:
        return lcm(1, *self.orders)

    def element_order(self, a) -> int:
        return lcm(1, *(n // _gcd(x, n) for x, n in zip(a, self.orders) if n > 1))

    def __repr__(self):
        return "x".join(f"C{n}" for n in self.orders) or "C1"


def _gcd(a, b):
    from math import gcd as _g

    return _g(a, b)


def parse_abelian(token: str) -> AbelianGroup:
    """Parse 'C6' or 'C2xC2' into an AbelianGroup."""
    orders = []
    for part in token.split("x"):
        part = part.strip()
        if not re.fullmatch(r"[Cc]\d+", part):
            raise InputError(f"cannot parse abelian group token {token!r}")
        orders.append(int(part[1:]))
    return AbelianGroup(orders)


# -- semidirect products -------------------------------------------------------


class SemidirectGroup:
    """G0 âŠ— A with A abelian acting on G0 by verified automorphisms.

    Elements are pairs (g, a) with (g1,a1)(g2,a2) = (g1 * a1(g2), a1*a2).
    A faithful permutation model on |G0| + |A| points (G0 by twisted right
    translation, A by its regular action) is built on demand.
    """

    def __init__(self, normal: PermGroup, acting: AbelianGroup, action_images):
        """action_images: per A-generator, the images of normal.generators."""
        self.normal = normal
        self.acting = acting
        agens = acting.generators()
        if len(action_images) != len(agens):
            raise InputError("need one automorphism per acting generator")
        # verify each is an automorphism (GroupHom construction checks
        # multiplicativity; order comparison checks bijectivity)
        self._gen_autos = []
        for images in action_images:
            images = [tuple(p) for p in images]
            hom = GroupHom(normal, normal,
                           dict(zip(normal.generators, images)))
            if PermGroup(normal.degree, images).order != normal.order:
                raise InputError("action image is not surjective")
            self._gen_autos.append(hom)
        # verify the assignment extends to a homomorphism A -> Aut(G0)
        for hom, agen, n in zip(self._gen_autos, agens, acting.orders):
            power = {g: g for g in normal.generators}
            for _ in range(acting.element_order(agen)):
                power = {g: hom.table[p] for g, p in power.items()}
            if any(power[g] != g for g in normal.generators):
                raise InputError("acting generator order does not match its"
                                 " automorphism order")
        for i, h1 in enumerate(self._gen_autos):
            for h2 in self._gen_autos[i + 1:]:
                for g in normal.generators:
                    if h1.table[h2.table[g]] != h2.table[h1.table[g]]:
                        raise InputError("automorphisms of an abelian acting"
                                         " group must commute")
        self._agens = agens

    @property
    def order(self) -> int:
        return self.normal.order * self.acting.order

    def act(self, a, g: tuple) -> tuple:
        """Apply the automorphism attached to a in A to g in G0."""
        out = g
        for exp, hom in zip(a, self._gen_autos_by_coordinate()):
            for _ in range(exp):
                out = hom.table[out]
        return out

    @lru_cache(maxsize=None)
    def _gen_autos_by_coordinate(self):
        # one hom per coordinate of the exponent tuples (orders of 1 skipped
        # by generators()); rebuild aligned list
        homs = []
        k = 0
        for n in self.acting.orders:
            if n > 1:
                homs.append(self._gen_autos[k])
                k += 1
            else:
                homs.append(GroupHom(self.normal, self.normal,
                                     dict(zip(self.normal.generators,
                                              self.normal.generators))))
        return tuple(homs)

    def multiply(self, x, y):
        (g1, a1), (g2, a2) = x, y
        return (pmul(g1, self.act(a1, g2)), self.acting.mul(a1, a2))

    def permutation_group(self):
        """Return (PermGroup, embed) with embed mapping pairs to permutations."""
        nelems = list(self.normal.elements())
        nindex = {g: i for i, g in enumerate(nelems)}
        aelems = self.acting.elements()
        aindex = {a: i for i, a in enumerate(aelems)}
        base = len(nelems)
        degree = base + len(aelems)

        def embed(pair):
            g, a = pair
            ainv = self.acting.inv(a)
            images = [0] * degree
            for i, x in enumerate(nelems):
                images[i] = nindex[self.act(ainv, pmul(x, g))]
            for j, b in enumerate(aelems):
                images[base + j] = base + aindex[self.acting.mul(b, a)]
            return tuple(images)

        gens = [embed((g, self.acting.identity)) for g in self.normal.generators]
        gens += [embed((self.normal.identity, a)) for a in self._agens]
        G = PermGroup(degree, gens)
        if G.order != self.order:
            raise InvariantViolation("semidirect permutation model is not faithful")
        return G, embed


# -- wreath and direct products -------------------------------------------------


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    d = G.degree + H.degree
    gens = [g + tuple(x + G.degree for x in range(H.degree)) for g in G.generators]
    gens += [tuple(range(G.degree)) + tuple(x + G.degree for x in h)
             for h in H.generators]
    return PermGroup(d, gens)


def wreath_product(K: PermGroup, m: int):
    """K wr S_m in its imprimitive action on m blocks of K's points.

    Returns (W, block_decompose) where block_decompose maps an element of W
    to (list of K-elements per block, block permutation sigma), following
    w(b, j) = (sigma(b), k_sigma(b)(j)).
    """
    d = K.degree
    degree = m * d
    gens = []
    for g in K.generators:
        gens.append(tuple(g) + tuple(range(d, degree)))
    if m > 1:
        swap = list(range(degree))
        for j in range(d):
            swap[j], swap[d + j] = swap[d + j], swap[j]
        gens.append(tuple(swap))
        if m > 2:
            cyc = list(range(degree))
            for b in range(m):
                for j in range(d):
                    cyc[b * d + j] = ((b + 1) % m) * d + j
            gens.append(tuple(cyc))
    W = PermGroup(degree, gens)

    def block_decompose(w: tuple):
        sigma = [0] * m
        ks = [None] * m
        for b in range(m):
            target = w[b * d] // d
            sigma[b] = target
            k = [0] * d
            for j in range(d):
                img = w[b * d + j]
                if img // d != target:
                    raise InputError("element does not preserve the block system")
                k[j] = img - target * d
            ks[target] = tuple(k)
        return ks, tuple(sigma)

    return W, block_decompose
