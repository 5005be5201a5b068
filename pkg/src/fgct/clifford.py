"""Clifford-theoretic layer: inertia groups, Galois orbits, semi-invariance,
the Clifford induction bijection, going-down classification, and the unique
invariant constituent of a coprime fixed-point-free action."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .chartab import (
    ClassFunction,
    character_table,
    conjugate_character_on_subgroup,
    constituents,
    galois_conjugate_character,
    induce_from_subgroup,
    inner_product_int,
    irr_over,
    restrict_to_subgroup,
)
from .cyclo import NumberFieldDescriptor, QQ, field_of_values, galois_over, is_subfield
from .errors import (
    HypothesisViolated,
    InternalCheckFailed,
    NonUnique,
    NotChief,
    NotSemiInvariantError,
    StabilizerMismatch,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    as_group,
    is_chief_factor,
    is_normal,
    whole_group,
)


# ---------------------------------------------------------------------------
# Inertia and Galois orbits
# ---------------------------------------------------------------------------


def inertia_group(G: FiniteGroup, L: Subgroup, phi: ClassFunction) -> Subgroup:
    """{g : phi^g = phi}; contains L."""
    out = [g for g in range(G.order)
           if conjugate_character_on_subgroup(G, L, phi, g) == phi]
    return Subgroup(G, tuple(out))


@dataclass(frozen=True)
class GaloisOrbit:
    """The orbit of an irreducible of L under Gal over the parameter field."""

    L: Subgroup
    members: tuple  # ClassFunctions on as_group(L), deterministic order
    field: NumberFieldDescriptor  # the parameter field F

    def __contains__(self, chi: ClassFunction) -> bool:
        return chi in self.members


def galois_orbit(L: Subgroup, phi: ClassFunction,
                 F: NumberFieldDescriptor = QQ) -> GaloisOrbit:
    from math import lcm

    H, _, _ = as_group(L)
    e = H.exponent()
    members = {phi}
    if e > 1:
        n = lcm(e, F.n)
        for k in galois_over(n, F):
            members.add(galois_conjugate_character(phi, k % e))
    ordered = sorted(members, key=lambda c: c.sort_key())
    return GaloisOrbit(L, tuple(ordered), F)


def orbit_stabilizer(G: FiniteGroup, orbit: GaloisOrbit) -> Subgroup:
    """{g in G : conjugation by g permutes the orbit members}."""
    mem = set(orbit.members)
    out = []
    for g in range(G.order):
        if all(conjugate_character_on_subgroup(G, orbit.L, m, g) in mem
               for m in orbit.members):
            out.append(g)
    return Subgroup(G, tuple(out))


# ---------------------------------------------------------------------------
# Semi-invariance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemiInvarianceCertificate:
    G: FiniteGroup
    L: Subgroup
    phi: ClassFunction
    field: NumberFieldDescriptor     # the base field F
    value_conductor: int             # conductor of F(phi) data, exponent level
    alpha_of: tuple                  # element -> Galois exponent k with phi^(g*k) = phi


@dataclass(frozen=True)
class NotSemiInvariant:
    witness: int                     # an element g with no Galois partner


def semi_invariance(G: FiniteGroup, L: Subgroup, phi: ClassFunction,
                    F: NumberFieldDescriptor = QQ):
    """Certificate that the F-Galois orbit of phi is G-stable, or a witness.

    alpha_of[g] is the exponent k (acting on the exponent-of-L cyclotomics)
    with phi^g applied to sigma_k equal to phi; the map g -> alpha_g is a
    homomorphism into Gal(F(phi)/F) with kernel the inertia group.
    """
    H, _, _ = as_group(L)
    e = H.exponent()
    from math import lcm
    n = lcm(e, F.n)
    galois_ks = galois_over(n, F)
    alphas = []
    for g in range(G.order):
        pg = conjugate_character_on_subgroup(G, L, phi, g)
        found = None
        for k in galois_ks:
            ke = k % e if e > 1 else 1
            cand = galois_conjugate_character(pg, ke) if e > 1 else pg
            if cand == phi:
                found = ke if e > 1 else 1
                break
        if found is None:
            return NotSemiInvariant(witness=g)
        alphas.append(found)
    cert = SemiInvarianceCertificate(G, L, phi, F, e, tuple(alphas))
    _check_certificate(cert)
    return cert


def _check_certificate(cert: SemiInvarianceCertificate):
    """alpha is a homomorphism into Gal(F(phi)/F) with kernel the inertia group."""
    G, e = cert.G, cert.value_conductor
    a = cert.alpha_of
    if e > 1:
        for g in range(G.order):
            for h in range(G.order):
                if not _same_galois_on_phi(cert.phi, a[G.mul(g, h)],
                                           (a[g] * a[h]) % e):
                    raise InternalCheckFailed("alpha map is not a homomorphism")
    ker = {g for g in range(G.order) if _same_galois_on_phi(cert.phi, a[g], 1)}
    inertia = set(inertia_group(G, cert.L, cert.phi).elements)
    if ker != inertia:
        raise InternalCheckFailed("kernel of alpha is not the inertia group")


def _same_galois_on_phi(phi: ClassFunction, k1: int, k2: int) -> bool:
    """Do sigma_k1 and sigma_k2 agree on the values of phi?"""
    e = phi.group.exponent()
    if e == 1:
        return True
    g1 = galois_conjugate_character(phi, k1 % e)
    g2 = galois_conjugate_character(phi, k2 % e)
    return g1 == g2


# ---------------------------------------------------------------------------
# Clifford induction bijection
# ---------------------------------------------------------------------------


def irr_over_orbit(G: FiniteGroup, orbit: GaloisOrbit) -> list:
    """Union of Irr(G | m) over the orbit members, in table order."""
    out = []
    for chi in character_table(G).irr:
        res = restrict_to_subgroup(chi, orbit.L)
        if any(inner_product_int(res, m) > 0 for m in orbit.members):
            out.append(chi)
    return out


def clifford_induction_bijection(G: FiniteGroup, T: Subgroup, orbit: GaloisOrbit):
    """The induction bijection Irr(T | orbit) <-> Irr(G | G-closure of orbit).

    T must be the stabilizer of the orbit; each induced character must be
    irreducible, the map bijective, and fields of values preserved.
    """
    if T != orbit_stabilizer(G, orbit):
        raise StabilizerMismatch("T is not the stabilizer of the orbit")
    Tg, embed, locate = as_group(T)
    members_in_T = transport_members_into(T, orbit)
    pairs = []
    seen = set()
    for tau in character_table(Tg).irr:
        res = restrict_to_subgroup(tau, Subgroup(Tg, tuple(locate[x] for x in orbit.L.elements)))
        if all(inner_product_int(res, m) == 0 for m in members_in_T):
            continue
        chi = induce_from_subgroup(G, T, tau)
        if inner_product_int(chi, chi) != 1:
            raise InternalCheckFailed("induced character is not irreducible")
        chi = next(c for c in character_table(G).irr if c == chi)
        if chi in seen:
            raise InternalCheckFailed("induction is not injective on the orbit block")
        seen.add(chi)
        if field_of_values(tau.values) != field_of_values(chi.values):
            raise InternalCheckFailed("induction did not preserve the field of values")
        pairs.append((tau, chi))
    # surjectivity onto Irr(G | G-closure of the orbit)
    closure = set()
    for g in range(G.order):
        for m in orbit.members:
            closure.add(conjugate_character_on_subgroup(G, orbit.L, m, g))
    target = set()
    for chi in character_table(G).irr:
        res = restrict_to_subgroup(chi, orbit.L)
        if any(inner_product_int(res, m) > 0 for m in closure):
            target.add(chi)
    if {c for _, c in pairs} != target:
        raise InternalCheckFailed("induction is not onto the G-closure block")
    return pairs


def transport_members_into(T: Subgroup, orbit: GaloisOrbit) -> tuple:
    """Re-home orbit members onto L viewed inside as_group(T)."""
    Tg, embed, locate = as_group(T)
    Lsub = Subgroup(Tg, tuple(locate[x] for x in orbit.L.elements))
    Hnew, embed_new, _ = as_group(Lsub)
    _, _, locate_old = as_group(orbit.L)
    from .chartab import conjugacy_classes
    data = conjugacy_classes(Hnew)
    members = []
    for m in orbit.members:
        vals = tuple(m.value_at(locate_old[embed[embed_new[r]]]) for r in data.reps)
        members.append(ClassFunction(Hnew, vals))
    return tuple(members)


# ---------------------------------------------------------------------------
# Going down
# ---------------------------------------------------------------------------


INDUCED_SAME_FIELD = "InducedSameField"
INDUCED_GALOIS_SHIFT = "InducedGaloisShift"
RESTRICTION = "Restriction"
FULLY_RAMIFIED = "FullyRamified"


@dataclass(frozen=True)
class GoingDownResult:
    case: str
    phi: ClassFunction            # chosen constituent of theta_L (lex-minimal)
    ramification: int             # e with theta_L = e * (sum of constituents)
    galois_shift_data: tuple      # for InducedGaloisShift: (k coset rep, exponent) pairs


def going_down_classify(G: FiniteGroup, K: Subgroup, L: Subgroup,
                        theta: ClassFunction,
                        F: NumberFieldDescriptor = QQ) -> GoingDownResult:
    """Classify the drop of a semi-invariant theta through a chief factor K/L."""
    if not (is_normal(G, K) and is_normal(G, L)):
        raise NotChief("K and L must be normal in G")
    if not is_chief_factor(G, K, L):
        raise NotChief("K/L is not a chief factor of G")
    Kg, embed_k, locate_k = as_group(K)
    if theta.group is not Kg:
        raise InternalCheckFailed("theta must live on as_group(K)")
    si = semi_invariance(G, K, theta, F)
    if isinstance(si, NotSemiInvariant):
        raise NotSemiInvariantError(f"theta is not semi-invariant (witness {si.witness})")

    L_in_K = Subgroup(Kg, tuple(locate_k[x] for x in L.elements))
    res = restrict_to_subgroup(theta, L_in_K)
    cons = constituents(res)
    phis = sorted((c for c, _ in cons), key=lambda c: c.sort_key())
    phi = phis[0]
    e = dict((id(c), m) for c, m in cons)[id(phi)]
    index = K.order // L.order
    Ftheta = _f_closure(F, theta.values)
    Fphi = _f_closure(F, phi.values)

    if len(cons) == 1 and e == 1:
        return GoingDownResult(RESTRICTION, phi, 1, ())
    if len(cons) == index and e == 1:
        # theta = phi^K
        if Ftheta == Fphi:
            return GoingDownResult(INDUCED_SAME_FIELD, phi, 1, ())
        data = _galois_shift_iso(Kg, L_in_K, phi, Ftheta, index)
        return GoingDownResult(INDUCED_GALOIS_SHIFT, phi, 1, data)
    if len(cons) == 1 and e * e == index:
        if Ftheta != Fphi:
            raise InternalCheckFailed("fully ramified case must preserve the field")
        return GoingDownResult(FULLY_RAMIFIED, phi, e, ())
    raise InternalCheckFailed(
        f"restriction shape (count={len(cons)}, e={e}) matches no going-down case")


def _f_closure(F: NumberFieldDescriptor, values) -> NumberFieldDescriptor:
    """F adjoined with the values: computed as field_of_values over F."""
    from math import lcm
    V = field_of_values(values)
    if F.n == 1:
        return V
    n = lcm(V.n, F.n)
    from .cyclo import units_mod, _canonical_descriptor
    stab = frozenset(k for k in units_mod(n)
                     if (k % F.n) in F.stabilizer
                     and (V.n == 1 or (k % V.n) in V.stabilizer))
    return _canonical_descriptor(n, stab)


def _galois_shift_iso(Kg: FiniteGroup, L_in_K: Subgroup, phi: ClassFunction,
                      Ftheta: NumberFieldDescriptor, index: int) -> tuple:
    """K/L = Gal(F(phi)/F(theta)) via the alpha map of phi inside K."""
    si = semi_invariance(Kg, L_in_K, phi, Ftheta)
    if isinstance(si, NotSemiInvariant):
        raise InternalCheckFailed("induced case: phi not semi-invariant in K over F(theta)")
    # count alpha images up to their action on the values of phi
    images = {}
    for g in range(Kg.order):
        img = galois_conjugate_character(phi, si.alpha_of[g]) \
            if si.value_conductor > 1 else phi
        key = img.sort_key()
        images.setdefault(key, (si.alpha_of[g], []))[1].append(g)
    if len(images) != index:
        raise InternalCheckFailed("alpha map on K is not onto a group of size |K/L|")
    return tuple(sorted((min(v), k) for k, v in images.values()))


# ---------------------------------------------------------------------------
# Unique invariant constituent under coprime fixed-point-free action
# ---------------------------------------------------------------------------


def _automorphism_maps(auto_maps, K: FiniteGroup):
    for m in auto_maps:
        if sorted(m) != list(range(K.order)):
            raise HypothesisViolated("action map is not a permutation of K")
    return [tuple(m) for m in auto_maps]


def _action_on_quotient_is_coprime_fpf(K: FiniteGroup, L_local: Subgroup, maps) -> None:
    from .groups import quotient
    Q, proj, _ = quotient(K, L_local)
    perms = set()
    for m in maps:
        sect = {}
        for x in range(K.order):
            sect.setdefault(proj[x], proj[m[x]])
        perms.add(tuple(sect[q] for q in range(Q.order)))
    # permutation group generated by the action images on K/L
    from .groups import from_permutations
    img = from_permutations(sorted(perms), Q.order)
    if gcd(img.order, Q.order) != 1:
        raise HypothesisViolated("action on K/L is not coprime")
    fixed = [q for q in range(Q.order) if all(p[q] == q for p in perms)]
    if len(fixed) != 1:
        raise HypothesisViolated("action on K/L has nontrivial fixed points")


def character_image_under_automorphism(chi: ClassFunction, m) -> ClassFunction:
    """chi composed with the inverse automorphism: the natural action on Irr."""
    K = chi.group
    from .chartab import conjugacy_classes
    data = conjugacy_classes(K)
    inv = [0] * K.order
    for x in range(K.order):
        inv[m[x]] = x
    vals = tuple(chi.value_at(inv[r]) for r in data.reps)
    return ClassFunction(K, vals)


def invariant_under_maps(chi: ClassFunction, maps) -> bool:
    return all(character_image_under_automorphism(chi, m) == chi for m in maps)


def unique_invariant_constituent(direction: str, auto_maps, K: Subgroup, L: Subgroup,
                                 character: ClassFunction) -> ClassFunction:
    """The unique action-invariant constituent of character_L (down) or
    character^K (up); hypotheses: coprime action on K/L with trivial fixed points.

    auto_maps are permutations of as_group(K) realizing the action.
    """
    Kg, embed_k, locate_k = as_group(K)
    maps = _automorphism_maps(auto_maps, Kg)
    L_local = Subgroup(Kg, tuple(locate_k[x] for x in L.elements))
    _action_on_quotient_is_coprime_fpf(Kg, L_local, maps)
    Lg, embed_l, _ = as_group(L_local)
    l_maps = []
    for m in maps:
        lm = []
        loc = {e: i for i, e in enumerate(embed_l)}
        for i, e in enumerate(embed_l):
            if m[e] not in loc:
                raise HypothesisViolated("action does not preserve L")
            lm.append(loc[m[e]])
        l_maps.append(tuple(lm))
    if direction == "down":
        if character.group is not Kg:
            raise HypothesisViolated("down direction expects a character of K")
        if not invariant_under_maps(character, maps):
            raise HypothesisViolated("character is not action-invariant")
        res = restrict_to_subgroup(character, L_local)
        cands = [c for c, _ in constituents(res) if invariant_under_maps(c, l_maps)]
    elif direction == "up":
        if character.group is not Lg:
            raise HypothesisViolated("up direction expects a character of L")
        if not invariant_under_maps(character, l_maps):
            raise HypothesisViolated("character is not action-invariant")
        ind = induce_from_subgroup(Kg, L_local, character)
        cands = [c for c, _ in constituents(ind) if invariant_under_maps(c, maps)]
    else:
        raise ValueError("direction must be 'down' or 'up'")
    if len(cands) != 1:
        raise NonUnique(f"{len(cands)} invariant constituents (expected exactly one)")
    return cands[0]
