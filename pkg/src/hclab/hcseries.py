"""Harish-Chandra induction/restriction and series data for concrete groups.

A BNDatum supplies the parabolic structure the abstract group cannot
determine on its own: records {name, P, L, U} with P = L x| U verified,
optionally a Weyl lift per record (a subgroup N with W = NL/L carrying the
relative Weyl action; without it N_G(L)/L is used), and optionally the
identity component for disconnected checks.

HC induction is honest parabolic induction: inflate across P -> P/U = L,
then induce to G.  HC restriction is U-averaging.  Both are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import (
    ClassFunction,
    KIND_CHARACTER,
    KIND_VIRTUAL,
    CharTable,
    character_table,
    group_conductor,
    induce,
    inner_product,
    inner_product_int,
    restrict,
)
from .cyclo import CyclotomicNumber
from .errors import HypothesisViolation, InputError, InvariantViolation
from .perm import PermGroup, pinv, pmul


class ParabolicRecord:
    """One parabolic P = L x| U inside the ambient group."""

    def __init__(self, name: str, P: PermGroup, L: PermGroup, U: PermGroup,
                 weyl: PermGroup | None = None, in_partition: bool = True):
        self.name = name
        self.P = P
        self.L = L
        self.U = U
        self.weyl = weyl
        # records carried only for identity-component checks (their P is a
        # parabolic of G0, not of G) are excluded from the series partition
        self.in_partition = in_partition
        if not P.is_subgroup(L) or not P.is_subgroup(U):
            raise InputError(f"record {name}: L and U must lie in P")
        if not P.is_normal(U):
            raise InputError(f"record {name}: U is not normal in P")
        if L.intersection(U).order != 1:
            raise InputError(f"record {name}: L and U intersect nontrivially")
        if L.order * U.order != P.order:
            raise InputError(f"record {name}: |P| != |L| * |U|")
        # Levi projection P -> L along the unique factorization p = l * u
        proj = {}
        for l in L.elements():
            for u in U.elements():
                proj[pmul(l, u)] = l
        if len(proj) != P.order:
            raise InputError(f"record {name}: L * U does not exhaust P")
        self._levi_proj = proj

    def levi_of(self, p: tuple) -> tuple:
        return self._levi_proj[p]

    def is_improper(self) -> bool:
        return self.U.order == 1 and self.P.order == self.L.order

    def __repr__(self):
        return (f"ParabolicRecord({self.name}: |P|={self.P.order},"
                f" |L|={self.L.order}, |U|={self.U.order})")


class BNDatum:
    """Ambient group with its parabolic records (improper record implied)."""

    def __init__(self, G: PermGroup, records, identity_component=None):
        self.G = G
        recs = list(records)
        if not any(r.is_improper() and r.L.order == G.order for r in recs):
            recs.append(ParabolicRecord("G", G, G, G.trivial_subgroup()))
        self.records = {r.name: r for r in recs}
        if len(self.records) != len(recs):
            raise InputError("duplicate record names")
        self.identity_component = identity_component
        if identity_component is not None:
            if not G.is_normal(identity_component):
                raise InputError("identity component must be normal")

    def record(self, name: str) -> ParabolicRecord:
        if name not in self.records:
            raise InputError(
                f"no parabolic record {name!r} (have: {sorted(self.records)})"
            )
        return self.records[name]

    def proper_records(self) -> list[ParabolicRecord]:
        return [r for r in self._ordered() if r.L.order < self.G.order]

    def _ordered(self) -> list[ParabolicRecord]:
        recs = [r for r in self.records.values() if r.in_partition]
        return sorted(recs, key=lambda r: (r.L.order, r.name))

    def sub_records(self, rec: ParabolicRecord) -> list[ParabolicRecord]:
        """Records strictly below rec: L' <= L and P' <= P, intersected into L."""
        out = []
        for other in self._ordered():
            if other.name == rec.name:
                continue
            if other.L.order >= rec.L.order:
                continue
            if not rec.L.is_subgroup(other.L) or not rec.P.is_subgroup(other.P):
                continue
            P_in_L = other.P.intersection(rec.L)
            U_in_L = other.U.intersection(rec.L)
            out.append(
                ParabolicRecord(f"{other.name}&{rec.name}", P_in_L, other.L, U_in_L)
            )
        return out

    def sub_datum(self, rec: ParabolicRecord) -> "BNDatum":
        return BNDatum(rec.L, self.sub_records(rec))


# -- the two functors ---------------------------------------------------------


def inflate_to_parabolic(rec: ParabolicRecord, f: ClassFunction) -> ClassFunction:
    """Pull back f on L to P along the projection P -> P/U = L."""
    if f.group is not rec.L:
        raise InputError("class function does not live on the record's Levi")
    P = rec.P
    nP = group_conductor(P)
    vals = []
    for rep, _size in P.conjugacy_classes():
        vals.append(f(rec.levi_of(rep)).promote(nP))
    return ClassFunction(P, vals, f.kind if f.kind != "irreducible" else KIND_CHARACTER)


def hc_induce(datum: BNDatum, record_name: str, f: ClassFunction) -> ClassFunction:
    rec = datum.record(record_name)
    if rec.is_improper() and rec.L is datum.G:
        return f
    return induce(inflate_to_parabolic(rec, f), datum.G)


def hc_restrict(datum: BNDatum, record_name: str, f: ClassFunction) -> ClassFunction:
    """U-averaged restriction: value at l is (1/|U|) sum_u f(l u)."""
    rec = datum.record(record_name)
    G = datum.G
    if f.group is not G:
        raise InputError("class function does not live on the ambient group")
    L, U = rec.L, rec.U
    nL = group_conductor(L)
    uelems = U.elements()
    vals = []
    for rep, _size in L.conjugacy_classes():
        acc = CyclotomicNumber.zero(group_conductor(G))
        for u in uelems:
            acc = acc + f(pmul(rep, u))
        vals.append((acc * Fraction(1, len(uelems))).retract(nL))
    return ClassFunction(L, vals, KIND_VIRTUAL)


def is_cuspidal(datum: BNDatum, f: ClassFunction) -> bool:
    """True iff every proper HC restriction of f vanishes identically."""
    for rec in datum.proper_records():
        if not hc_restrict(datum, rec.name, f).is_zero():
            return False
    return True


def cuspidal_rows(datum: BNDatum, rec: ParabolicRecord) -> list[int]:
    """Indices of the cuspidal irreducibles of rec.L, via the sub-datum."""
    sub = datum.sub_datum(rec)
    table = character_table(rec.L)
    return [i for i, chi in enumerate(table.rows) if is_cuspidal(sub, chi)]


# -- conjugacy of cuspidal pairs ----------------------------------------------


def _levi_orbits(datum: BNDatum, rec: ParabolicRecord, rows: list[int]):
    """Partition the given rows of Irr(L) into N_G(L)-orbits."""
    G = datum.G
    L = rec.L
    table = character_table(L)
    norm = G.normalizer(L)
    remaining = dict.fromkeys(rows)
    orbits = []
    for i in rows:
        if i not in remaining:
            continue
        orbit = {i}
        frontier = [i]
        del remaining[i]
        while frontier:
            j = frontier.pop()
            for g in norm.generators:
                k = table.index_of(table.rows[j].conjugate_by(g))
                if k not in orbit:
                    orbit.add(k)
                    if k in remaining:
                        del remaining[k]
                    frontier.append(k)
        orbits.append(sorted(orbit))
    return orbits


def _conjugator(G: PermGroup, A: PermGroup, B: PermGroup):
    """Some g in G with A**g = B, or None."""
    if A.order != B.order:
        return None
    for g in G.elements():
        if all(pmul(pmul(pinv(g), a), g) in B for a in A.generators):
            return g
    return None


# -- the partition -------------------------------------------------------------


@dataclass
class Series:
    record: str
    tau_orbit: list[int]      # N_G(L)-orbit of cuspidal rows of Irr(L)
    members: list[int]        # rows of Irr(G)
    endo_dim: int             # <R(tau), R(tau)>
    weyl_order: int | None    # |W_tau| when computable

    def to_json(self) -> dict:
        return {
            "record": self.record,
            "cuspidal_orbit": self.tau_orbit,
            "members": self.members,
            "endomorphism_dim": self.endo_dim,
            "relative_weyl_order": self.weyl_order,
        }


@dataclass
class HCSeriesMap:
    datum: BNDatum
    series: list[Series]
    assignment: dict[int, int]  # row of Irr(G) -> index into series

    def to_json(self) -> dict:
        return {
            "series": [s.to_json() for s in self.series],
            "assignment": {str(k): v for k, v in sorted(self.assignment.items())},
        }


def hc_partition(datum: BNDatum) -> HCSeriesMap:
    """Assign every irreducible of G to its unique cuspidal-pair series.

    Raises InvariantViolation if some irreducible lies in two non-conjugate
    series (checked together with exact Mackey disjointness of the induced
    characters).
    """
    G = datum.G
    TG = character_table(G)
    series: list[Series] = []
    induced_chars: list[ClassFunction] = []

    # identify records with G-conjugate Levis so their pairs merge
    ordered = datum._ordered()
    canon: dict[str, tuple[str, tuple]] = {}
    for rec in ordered:
        match = None
        for prev_name, conj in canon.values():
            prev = datum.record(prev_name)
            if prev.L.order == rec.L.order and prev_name != rec.name:
                g = _conjugator(G, rec.L, prev.L)
                if g is not None:
                    match = (prev_name, g)
                    break
        canon[rec.name] = match or (rec.name, G.identity)

    for rec in ordered:
        canon_name, conj = canon[rec.name]
        if canon_name != rec.name:
            continue  # handled through the conjugate record
        rows = cuspidal_rows(datum, rec)
        for orbit in _levi_orbits(datum, rec, rows):
            tau = character_table(rec.L).rows[orbit[0]]
            R = hc_induce(datum, rec.name, tau)
            members = [i for i, mult in TG.constituents(R)]
            endo = inner_product_int(R, R)
            series.append(Series(rec.name, orbit, members, endo, None))
            induced_chars.append(R)

    # Mackey disjointness and the partition property
    assignment: dict[int, int] = {}
    for si, s in enumerate(series):
        for row in s.members:
            if row in assignment:
                raise InvariantViolation(
                    f"Irr(G) row {row} lies in two series:"
                    f" {series[assignment[row]]} and {s}"
                )
            assignment[row] = si
    if len(assignment) != len(TG.rows):
        missing = [i for i in range(len(TG.rows)) if i not in assignment]
        raise InvariantViolation(f"rows {missing} lie in no series")
    for i in range(len(series)):
        for j in range(i + 1, len(series)):
            if inner_product_int(induced_chars[i], induced_chars[j]) != 0:
                raise InvariantViolation(
                    f"Mackey disjointness fails for series {i} and {j}"
                )

    # relative Weyl orders where the carrier is available
    for s in series:
        rec = datum.record(s.record)
        try:
            W_tau, endo, _warn = relative_weyl(
                datum, s.record, character_table(rec.L).rows[s.tau_orbit[0]]
            )
            s.weyl_order = W_tau.order
        except InputError:
            s.weyl_order = None
    return HCSeriesMap(datum, series, assignment)


def relative_weyl(datum: BNDatum, record_name: str, tau: ClassFunction):
    """W_tau = Stab_{N L / L}(tau) with N the record's Weyl lift if present,
    N_G(L) otherwise.

    Returns (W_tau, endo_dim, warning) where endo_dim = <R(tau), R(tau)> and
    warning is set when |W_tau| != endo_dim (a Howlett-Lehrer cocycle or a
    datum whose Weyl carrier differs from the algebraic one).
    """
    rec = datum.record(record_name)
    G = datum.G
    if tau.group is not rec.L:
        raise InputError("tau must live on the record's Levi")
    carrier = rec.weyl.join(rec.L) if rec.weyl is not None else G.normalizer(rec.L)
    if not carrier.is_normal(rec.L):
        raise InputError("Levi is not normal in its Weyl carrier")
    Q, hom = carrier.quotient(rec.L)
    # deterministic lifts: smallest preimage per quotient element
    lifts: dict[tuple, tuple] = {}
    for g in carrier.elements():
        img = hom(g)
        if img not in lifts:
            lifts[img] = g
    stab_elems = []
    for q in Q.elements():
        n = lifts[q]
        if tau.conjugate_by(n) == tau:
            stab_elems.append(q)
    from .perm import _from_element_list

    W_tau = _from_element_list(Q.degree, stab_elems)
    R = hc_induce(datum, record_name, tau)
    endo = inner_product_int(R, R)
    warning = W_tau.order != endo
    return W_tau, endo, warning


def q_parameter(R: ClassFunction, table: CharTable) -> Fraction | None:
    """Ratio of the two constituent degrees of a length-<=2 multiplicity-free
    induced character; 1 when irreducible; None ('undefined') otherwise."""
    cons = table.constituents(R)
    if len(cons) == 1 and cons[0][1] == 1:
        return Fraction(1)
    if len(cons) == 2 and all(m == 1 for _i, m in cons):
        d1 = table.rows[cons[0][0]].degree().to_int()
        d2 = table.rows[cons[1][0]].degree().to_int()
        big, small = max(d1, d2), min(d1, d2)
        return Fraction(big, small)
    return None


# -- disconnected structure -----------------------------------------------------


@dataclass
class DisconnectedWitness:
    record: str
    phi_index: int
    coset_count: int
    restriction_identity: bool
    adjoint_identity: bool

    def holds(self) -> bool:
        return self.restriction_identity and self.adjoint_identity

    def to_json(self) -> dict:
        return {
            "record": self.record,
            "phi": self.phi_index,
            "cosets": self.coset_count,
            "restriction_identity": self.restriction_identity,
            "adjoint_identity": self.adjoint_identity,
        }


def disconnected_restriction_check(datum: BNDatum, record_name: str,
                                   phi: ClassFunction) -> DisconnectedWitness:
    """Verify both identities relating HC functors of G and its identity
    component:

      Res_{G0} R^G_{L<P}(phi) = sum over a in G/(L G0) of
                                a-conjugate of R^{G0}_{L0<P0}(Res_{L0} phi)
      Res_{L0} *R^G_{L<P}(psi) = *R^{G0}_{L0<P0}(Res_{G0} psi)   for psi in Irr(G)

    Exact equalities of cyclotomic class functions; a failed identity raises
    InvariantViolation, failed hypotheses raise HypothesisViolation.
    """
    G = datum.G
    G0 = datum.identity_component
    if G0 is None:
        raise HypothesisViolation("datum has no identity component")
    rec = datum.record(record_name)
    if not all(u in G0 for u in rec.U.generators):
        raise HypothesisViolation("unipotent radical is not inside G0")
    L0 = rec.L.intersection(G0)
    P0 = rec.P.intersection(G0)
    rec0 = ParabolicRecord(rec.name + "0", P0, L0, rec.U)
    datum0 = BNDatum(G0, [rec0])

    # left-hand side of the restriction identity
    R = hc_induce(datum, rec.name, phi)
    lhs = restrict(R, G0)

    LG0 = rec.L.join(G0)
    reps = G.right_transversal(LG0)
    phi0 = restrict(phi, L0)
    R0 = hc_induce(datum0, rec0.name, phi0)
    n0 = group_conductor(G0)
    rhs = ClassFunction(G0, [CyclotomicNumber.zero(n0)] *
                        len(G0.conjugacy_classes()))
    for a in reps:
        rhs = rhs + R0.conjugate_by(a)
    restriction_ok = lhs.values == rhs.values

    # adjoint identity, quantified over Irr(G)
    adjoint_ok = True
    for psi in character_table(G).rows:
        left = restrict(hc_restrict(datum, rec.name, psi), L0)
        right = hc_restrict(datum0, rec0.name, restrict(psi, G0))
        if left.values != right.values:
            adjoint_ok = False
            break

    witness = DisconnectedWitness(
        record=rec.name,
        phi_index=character_table(rec.L).index_of(phi) or 0,
        coset_count=len(reps),
        restriction_identity=restriction_ok,
        adjoint_identity=adjoint_ok,
    )
    if not witness.holds():
        raise InvariantViolation(
            f"disconnected restriction identities failed: {witness.to_json()}"
        )
    return witness
