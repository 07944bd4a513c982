"""Clifford theory for a normal subgroup N of M, at the character level.

Everything here is phrased in terms of exact character arithmetic: orbits
and inertia groups of irreducible characters, the multiplicities of theta
in restrictions (the dimensions of the Clifford labels), extendability,
Gallagher's bijection for abelian inertia quotients, the regular-sum
identity, gluing of extensions along a cyclic-times-cyclic decomposition,
and the canonical tensor-permutation extension to wreath products.

The 2-cocycle attached to theta is never materialized; its computable
shadow is (extendable, label_dims).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import (
    ClassFunction,
    KIND_IRREDUCIBLE,
    character_table,
    class_fusion,
    group_conductor,
    induce,
    inflate,
    inner_product,
    inner_product_int,
    restrict,
)
from .cyclo import CyclotomicNumber
from .errors import HypothesisViolation, InputError, InvariantViolation
from .perm import PermGroup, pinv, pmul, wreath_product


def character_orbit(M: PermGroup, N: PermGroup, theta: ClassFunction):
    """Orbit of theta under M-conjugation, as a list of ClassFunctions.

    Returns (orbit, stabilizer_elements) where the stabilizer is the full
    inertia group I_M(theta) as an element list.
    """
    if theta.group is not N:
        raise InputError("theta must live on N")
    if not M.is_normal(N):
        raise InputError("N is not normal in M")
    seen = {theta.values: theta}
    frontier = [theta]
    while frontier:
        nxt = []
        for f in frontier:
            for g in M.generators:
                fg = f.conjugate_by(g)
                if fg.values not in seen:
                    seen[fg.values] = fg
                    nxt.append(fg)
        frontier = nxt
    orbit = sorted(seen.values(), key=lambda f: f.sort_key())
    inertia_elems = [m for m in M.elements()
                     if theta.conjugate_by(m).values == theta.values]
    return orbit, inertia_elems


@dataclass
class CliffordReport:
    """Everything clifford_decomposition computes for (M, N, theta)."""

    M: PermGroup
    N: PermGroup
    theta_index: int
    orbit_indices: list[int]          # indices into Irr(N)
    inertia: PermGroup                # I_M(theta)
    omega: PermGroup                  # I/N on cosets
    omega_hom: object                 # GroupHom I -> omega
    omega_abelian: bool
    above_indices: list[int]          # indices into Irr(M) lying above theta
    label_dims: list[int]             # sorted multiplicities <Res chi, theta>
    extendable: bool
    extension_indices: list[int]      # rows of Irr(I) restricting to theta
    designated_extension: int | None  # first extension in table order
    gallagher: list[tuple[int, int]] | None  # (eta row in Irr(omega), chi row)

    def to_json(self) -> dict:
        return {
            "theta": self.theta_index,
            "orbit": self.orbit_indices,
            "inertia_order": self.inertia.order,
            "omega_order": self.omega.order,
            "omega_abelian": self.omega_abelian,
            "above": self.above_indices,
            "label_dims": self.label_dims,
            "extendable": self.extendable,
            "extensions": self.extension_indices,
            "designated_extension": self.designated_extension,
            "gallagher": self.gallagher,
        }


def extensions_of(I: PermGroup, N: PermGroup, theta: ClassFunction) -> list[int]:
    """Rows of Irr(I) whose restriction to N equals theta exactly."""
    TI = character_table(I)
    theta_deg = theta.degree().to_int()
    out = []
    for i, chi in enumerate(TI.rows):
        if chi.degree().to_int() != theta_deg:
            continue
        if restrict(chi, N) == theta:
            out.append(i)
    return out


def clifford_decomposition(M: PermGroup, N: PermGroup,
                           theta: ClassFunction) -> CliffordReport:
    """Full Clifford data for theta in Irr(N) under N normal in M."""
    TN = character_table(N)
    theta_index = TN.index_of(theta)
    if theta_index is None or theta.kind != KIND_IRREDUCIBLE:
        if inner_product_int(theta, theta) != 1:
            raise InputError("theta is not irreducible")
        theta_index = TN.index_of(theta)

    orbit, inertia_elems = character_orbit(M, N, theta)
    orbit_indices = sorted(TN.index_of(f) for f in orbit)
    from .perm import _from_element_list

    I = _from_element_list(M.degree, inertia_elems)
    if M.order % I.order or len(orbit) * I.order != M.order:
        raise InvariantViolation("orbit-stabilizer count failed")

    omega, omega_hom = I.quotient(N)

    TM = character_table(M)
    above = []
    label_dims = []
    for i, chi in enumerate(TM.rows):
        mult = inner_product_int(restrict(chi, N), theta)
        if mult:
            above.append(i)
            label_dims.append(mult)

    ext = extensions_of(I, N, theta)
    extendable = bool(ext)
    designated = ext[0] if ext else None

    gallagher = None
    if extendable and omega.is_abelian():
        TI = character_table(I)
        TOmega = character_table(omega)
        theta_tilde = TI.rows[designated]
        gallagher = []
        images = set()
        for eta_idx, eta in enumerate(TOmega.rows):
            chi = induce(theta_tilde.tensor(inflate(eta, omega_hom)), M)
            row = TM.index_of(ClassFunction(M, chi.values, KIND_IRREDUCIBLE))
            if row is None or row not in above:
                raise InvariantViolation("Gallagher image is not above theta")
            images.add(row)
            gallagher.append((eta_idx, row))
        if sorted(images) != above or len(images) != len(gallagher):
            raise InvariantViolation("Gallagher map is not a bijection")

    return CliffordReport(
        M=M, N=N, theta_index=theta_index,
        orbit_indices=orbit_indices,
        inertia=I, omega=omega, omega_hom=omega_hom,
        omega_abelian=omega.is_abelian(),
        above_indices=above, label_dims=sorted(label_dims),
        extendable=extendable, extension_indices=ext,
        designated_extension=designated, gallagher=gallagher,
    )


def regular_sum_check(M: PermGroup, N: PermGroup,
                      theta: ClassFunction) -> ClassFunction:
    """Verify sum_E dim(E) * chi_E = Ind_N^M theta; return the character.

    The sum runs over Irr(M | theta) with dim(E) = <Res chi, theta>.  The
    identity is a theorem, so a mismatch raises InvariantViolation.
    """
    TM = character_table(M)
    induced = induce(theta, M)
    n = group_conductor(M)
    acc = ClassFunction(M, [CyclotomicNumber.zero(n)] * len(M.conjugacy_classes()))
    for chi in TM.rows:
        mult = inner_product_int(restrict(chi, N), theta)
        if mult:
            acc = acc + mult * chi
    if acc.values != induced.values:
        raise InvariantViolation("regular sum does not equal Ind theta")
    return induced


def extension_gluing(I: PermGroup, N: PermGroup, theta: ClassFunction,
                     I_gamma: PermGroup, I_phi: PermGroup,
                     u_gamma: ClassFunction, u_phi: ClassFunction) -> ClassFunction:
    """The unique extension of theta to I restricting to u_gamma and u_phi.

    Hypotheses (all verified): Omega = I/N decomposes as Gamma x Phi with
    both factors cyclic, realized by the subgroups I_gamma and I_phi; u_gamma
    extends theta to I_gamma and is invariant under I_phi; u_phi extends
    theta to I_phi.
    """
    def fail(msg):
        raise HypothesisViolation(f"extension gluing: {msg}")

    if not I.is_normal(N):
        fail("N is not normal in I")
    for H in (I_gamma, I_phi):
        if not I.is_subgroup(H) or not H.is_subgroup(N):
            fail("I_gamma/I_phi must sit between N and I")
    inter = I_gamma.intersection(I_phi)
    if inter.order != N.order:
        fail("I_gamma and I_phi do not intersect in N")
    if I_gamma.order * I_phi.order != I.order * N.order:
        fail("I_gamma * I_phi does not cover I")
    omega, hom = I.quotient(N)
    if not omega.is_abelian():
        fail("I/N is not abelian")
    gamma = [hom(g) for g in I_gamma.elements()]
    phi = [hom(g) for g in I_phi.elements()]
    if not _is_cyclic_set(omega, gamma) or not _is_cyclic_set(omega, phi):
        fail("the two factors of Omega are not cyclic")

    if restrict(u_gamma, N) != theta or restrict(u_phi, N) != theta:
        fail("u_gamma/u_phi do not extend theta")
    for x in I_phi.generators:
        if u_gamma.conjugate_by(x) != u_gamma:
            fail("u_gamma is not Phi-invariant")

    candidates = []
    for idx in extensions_of(I, N, theta):
        chi = character_table(I).rows[idx]
        if restrict(chi, I_gamma) == u_gamma and restrict(chi, I_phi) == u_phi:
            candidates.append(chi)
    if not candidates:
        fail("no common extension exists")
    if len(candidates) > 1:
        raise InvariantViolation("gluing produced more than one extension")
    return candidates[0]


def _is_cyclic_set(G: PermGroup, elements) -> bool:
    from .perm import perm_order

    n = len(set(elements))
    return any(perm_order(x) == n for x in elements)


def wreath_extension(K: PermGroup, theta: ClassFunction, m: int):
    """Character of the tensor-permutation module of K wr S_m on V^(x m).

    Returns (W, chara) where W is the wreath product in its imprimitive
    action.  The value at (k_1, ..., k_m; sigma) is the product over the
    cycles of sigma of theta evaluated at the cycle product of the k's,
    taken in descending traversal order; trace cyclicity makes the value
    independent of each cycle's starting point.
    """
    if theta.group is not K:
        raise InputError("theta must live on K")
    if m < 1:
        raise InputError("m must be at least 1")
    if inner_product_int(theta, theta) != 1:
        raise InputError("theta is not irreducible")
    W, decompose = wreath_product(K, m)
    nW = group_conductor(W)

    def value_at(w) -> CyclotomicNumber:
        ks, sigma = decompose(w)
        out = CyclotomicNumber.one(nW)
        seen = [False] * m
        for start in range(m):
            if seen[start]:
                continue
            prod = K.identity
            b = start
            while not seen[b]:
                seen[b] = True
                prod = pmul(prod, ks[b])
                b = sigma[b]
            out = out * theta(prod).promote(nW)
        return out

    values = [value_at(rep) for rep, _size in W.conjugacy_classes()]
    chara = ClassFunction(W, values, KIND_IRREDUCIBLE)
    return W, chara, value_at
