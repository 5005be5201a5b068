"""Finite groups as dense index sets with materialized Cayley tables.

Elements are indices 0..order-1.  Everything is exhaustive: the order cap
(FGCT_ORDER_CAP, default 2000) bounds what may be constructed, and all
subgroup calculus is done by direct enumeration.  Groups are immutable
after construction; lazy caches only ever go from unset to set.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from math import gcd

from .errors import (
    HandleMismatch,
    InvalidAction,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotNormal,
    OrderCapExceeded,
    UnknownCatalogEntry,
)

DEFAULT_ORDER_CAP = 2000


def order_cap() -> int:
    return int(os.environ.get("FGCT_ORDER_CAP", DEFAULT_ORDER_CAP))


class FiniteGroup:
    """A finite group on indices 0..order-1 with a full multiplication table."""

    __slots__ = (
        "order", "table", "identity", "inv", "name", "perm_realization",
        "_orders", "_classdata", "_chartable", "_asgroup_cache",
        "_quotient_cache", "_subgroups_cache", "_center",
    )

    def __init__(self, table, name=None, perm_realization=None, check=False):
        n = len(table)
        if n > order_cap():
            raise OrderCapExceeded(f"group order {n} exceeds cap {order_cap()}")
        self.order = n
        self.table = [list(row) for row in table]
        self.name = name
        self.perm_realization = perm_realization
        ident = None
        for e in range(n):
            if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise NoIdentity("no two-sided identity in table")
        self.identity = ident
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if self.table[x][y] == ident and self.table[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise NoInverse(x)
        self.inv = inv
        if check:
            self.check_associativity()
        self._orders = None
        self._classdata = None
        self._chartable = None
        self._asgroup_cache = {}
        self._quotient_cache = {}
        self._subgroups_cache = {}
        self._center = None

    # -- core ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, x: int) -> int:
        """g conjugated by x: x^-1 g x."""
        t = self.table
        return t[t[self.inv[x]][g]][x]

    def comm(self, x: int, y: int) -> int:
        """Commutator x^-1 y^-1 x y."""
        t = self.table
        return t[t[t[self.inv[x]][self.inv[y]]][x]][y]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = self.identity
        while k:
            if k & 1:
                out = self.table[out][g]
            g = self.table[g][g]
            k >>= 1
        return out

    def element_order(self, g: int) -> int:
        if self._orders is None:
            self._orders = [0] * self.order
        if self._orders[g]:
            return self._orders[g]
        k, x = 1, g
        while x != self.identity:
            x = self.table[x][g]
            k += 1
        self._orders[g] = k
        return k

    def exponent(self) -> int:
        out = 1
        for g in range(self.order):
            o = self.element_order(g)
            out = out * o // gcd(out, o)
        return out

    def elements(self) -> range:
        return range(self.order)

    def check_associativity(self):
        t = self.table
        n = self.order
        # left-translation composition check, equivalent to full associativity
        for a in range(n):
            ra = t[a]
            for b in range(n):
                rab = t[ra[b]]
                rb = t[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise NonAssociative((a, b, c))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def __repr__(self):
        return f"FiniteGroup({self.name or 'anon'}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a canonical sorted tuple of parent element indices."""

    parent: FiniteGroup
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g: int) -> bool:
        return g in self._set()

    def _set(self) -> frozenset:
        return frozenset(self.elements)

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __contains__(self, g: int) -> bool:
        return g in self._set()

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name or 'anon'})"


@dataclass(frozen=True)
class GroupAction:
    """A homomorphism actor -> Aut(target), one permutation per actor element."""

    actor: FiniteGroup
    target: FiniteGroup
    maps: tuple  # maps[a] is a tuple permutation of target indices

    def validate(self):
        N, A = self.target, self.actor
        if len(self.maps) != A.order:
            raise InvalidAction("need one permutation per actor element")
        for a, m in enumerate(self.maps):
            if sorted(m) != list(range(N.order)):
                raise InvalidAction(f"map of actor element {a} is not a bijection")
            for x in range(N.order):
                for y in range(N.order):
                    if m[N.mul(x, y)] != N.mul(m[x], m[y]):
                        raise InvalidAction(
                            f"map of actor element {a} is not an automorphism")
        for a in range(A.order):
            for b in range(A.order):
                ab = A.mul(a, b)
                ma, mb, mab = self.maps[a], self.maps[b], self.maps[ab]
                if any(mab[x] != ma[mb[x]] for x in range(N.order)):
                    raise InvalidAction("maps do not define a homomorphism")
        return self

    def apply(self, a: int, x: int) -> int:
        return self.maps[a][x]


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def from_cayley(table, name=None) -> FiniteGroup:
    from .errors import InputError

    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise InputError(f"table must be {n}x{n} with entries in range")
    return FiniteGroup(table, name=name, check=True)


def from_permutations(generators, degree: int, name=None) -> FiniteGroup:
    """Closure of the generators inside Sym(degree)."""
    ident = tuple(range(degree))
    gens = []
    for g in generators:
        g = tuple(g)
        if sorted(g) != list(range(degree)):
            raise InvalidAction(f"generator {g} is not a permutation of 0..{degree-1}")
        gens.append(g)
    elems = [ident]
    index = {ident: 0}
    queue = [ident]
    cap = order_cap()
    while queue:
        p = queue.pop()
        for g in gens:
            q = tuple(p[g[i]] for i in range(degree))
            if q not in index:
                if len(elems) >= cap:
                    raise OrderCapExceeded(f"closure exceeds cap {cap}")
                index[q] = len(elems)
                elems.append(q)
                queue.append(q)
    table = [[index[tuple(a[b[i]] for i in range(degree))] for b in elems] for a in elems]
    return FiniteGroup(table, name=name, perm_realization=tuple(elems))


def _table_from_op(elems, op, name, perms=None):
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[op(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name=name, perm_realization=perms)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnknownCatalogEntry("cyclic(n) needs n >= 1")
    if n > order_cap():
        raise OrderCapExceeded(f"order {n} exceeds cap")
    return _table_from_op(list(range(n)), lambda a, b: (a + b) % n, f"C{n}")


def dihedral(order: int) -> FiniteGroup:
    if order % 2 or order < 2:
        raise UnknownCatalogEntry("dihedral(order) needs even order >= 2")
    n = order // 2
    elems = [(i, s) for s in (0, 1) for i in range(n)]

    def op(a, b):
        i, s = a
        j, t = b
        return ((i + j) % n, t) if s == 0 else ((i - j) % n, 1 - t)

    return _table_from_op(elems, op, f"D{order}")


def quaternion8() -> FiniteGroup:
    # elements (k, s) <-> i^a j^b sign with explicit table via pair encoding
    # use the standard presentation on {1,-1,i,-i,j,-j,k,-k}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    mul = {}
    sign = lambda s, t: s * t
    base = {("1", "1"): "1"}

    def m(a, b):
        sa, ua = (-1, a[1:]) if a.startswith("-") else (1, a)
        sb, ub = (-1, b[1:]) if b.startswith("-") else (1, b)
        table = {
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, u = table[(ua, ub)]
        s *= sa * sb
        return u if s == 1 else "-" + u

    return _table_from_op(names, m, "Q8")


def symmetric(n: int) -> FiniteGroup:
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    if len(perms) > order_cap():
        raise OrderCapExceeded(f"S{n} exceeds cap")
    return _table_from_op(
        perms, lambda a, b: tuple(a[b[i]] for i in range(n)), f"S{n}", perms=tuple(perms))


def alternating(n: int) -> FiniteGroup:
    def parity(p):
        seen, out = set(), 0
        for i in range(len(p)):
            if i in seen:
                continue
            j, ln = i, 0
            while j not in seen:
                seen.add(j)
                j = p[j]
                ln += 1
            out ^= (ln - 1) & 1
        return out

    perms = [tuple(p) for p in itertools.permutations(range(n)) if parity(p) == 0]
    if len(perms) > order_cap():
        raise OrderCapExceeded(f"A{n} exceeds cap")
    return _table_from_op(
        perms, lambda a, b: tuple(a[b[i]] for i in range(n)), f"A{n}", perms=tuple(perms))


def extraspecial(p: int, exponent: str = "p") -> FiniteGroup:
    """The two extraspecial groups of order p^3 (odd p): exponent p or p^2."""
    if p < 3 or any(p % q == 0 for q in range(2, p)):
        raise UnknownCatalogEntry("extraspecial needs an odd prime p")
    if exponent in ("p", "exp_p", str(p)):
        elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

        def op(u, v):
            a, b, c = u
            d, e, f = v
            return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

        return _table_from_op(elems, op, f"ES{p}^3+")
    if exponent in ("p2", "p^2", "exp_p2", str(p * p)):
        # <x,y | x^(p^2)=y^p=1, x^y = x^(1+p)>
        elems = [(a, b) for b in range(p) for a in range(p * p)]

        def op2(u, v):
            a, b = u
            c, d = v
            return ((a + c * pow(1 + p, b, p * p)) % (p * p), (b + d) % p)

        return _table_from_op(elems, op2, f"ES{p}^3-")
    raise UnknownCatalogEntry(f"extraspecial exponent {exponent!r}")


def sl2_3() -> FiniteGroup:
    elems = []
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if (a * d - b * c) % 3 == 1:
                        elems.append((a, b, c, d))

    def op(u, v):
        a, b, c, d = u
        e, f, g, h = v
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    return _table_from_op(elems, op, "SL(2,3)")


def from_catalog(name: str, **params) -> FiniteGroup:
    name = name.lower()
    if name == "cyclic":
        return cyclic(int(params["n"]))
    if name == "dihedral":
        return dihedral(int(params.get("order", params.get("n", 0))))
    if name in ("quaternion8", "q8"):
        return quaternion8()
    if name in ("sym", "symmetric"):
        return symmetric(int(params["n"]))
    if name in ("alt", "alternating"):
        return alternating(int(params["n"]))
    if name == "extraspecial":
        return extraspecial(int(params["p"]), str(params.get("exp", "p")))
    if name in ("sl2_3", "sl(2,3)", "sl23"):
        return sl2_3()
    raise UnknownCatalogEntry(name)


def semidirect_product(act: GroupAction):
    """Outer semidirect product target x| actor.

    Returns (G, embed_target, embed_actor); element (n, a) has index a*|N|+n,
    with (n1,a1)(n2,a2) = (n1 * a1(n2), a1 a2).
    """
    act.validate()
    N, A = act.target, act.actor
    if N.order * A.order > order_cap():
        raise OrderCapExceeded("semidirect product exceeds cap")
    nn = N.order
    table = [[0] * (nn * A.order) for _ in range(nn * A.order)]
    for a1 in range(A.order):
        m1 = act.maps[a1]
        for n1 in range(nn):
            row = table[a1 * nn + n1]
            for a2 in range(A.order):
                a = A.mul(a1, a2)
                for n2 in range(nn):
                    row[a2 * nn + n2] = a * nn + N.mul(n1, m1[n2])
    G = FiniteGroup(table, name=f"({N.name or '?'}):({A.name or '?'})")
    embed_n = tuple(range(nn))
    embed_a = tuple(a * nn + N.identity for a in range(A.order))
    return G, embed_n, embed_a


def direct_product(G: FiniteGroup, H: FiniteGroup):
    trivial = GroupAction(H, G, tuple(tuple(range(G.order)) for _ in range(H.order)))
    return semidirect_product(trivial)


# ---------------------------------------------------------------------------
# Subgroup calculus
# ---------------------------------------------------------------------------


def subgroup_closure(G: FiniteGroup, seed) -> Subgroup:
    elems = {G.identity}
    queue = list(set(seed))
    for s in queue:
        elems.add(s)
    frontier = list(elems)
    while frontier:
        new = []
        for x in frontier:
            for y in list(elems):
                for z in (G.mul(x, y), G.mul(y, x)):
                    if z not in elems:
                        elems.add(z)
                        new.append(z)
            xi = G.inv[x]
            if xi not in elems:
                elems.add(xi)
                new.append(xi)
        frontier = new
    return Subgroup(G, tuple(elems))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (G.identity,))


def centralizer(G: FiniteGroup, elems) -> Subgroup:
    if isinstance(elems, Subgroup):
        elems = elems.elements
    elems = list(elems)
    out = [g for g in range(G.order) if all(G.mul(g, s) == G.mul(s, g) for s in elems)]
    return Subgroup(G, tuple(out))


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    sset = S._set()
    out = [g for g in range(G.order) if all(G.conj(s, g) in sset for s in S.elements)]
    return Subgroup(G, tuple(out))


def center(G: FiniteGroup) -> Subgroup:
    if G._center is None:
        G._center = centralizer(G, range(G.order))
    return G._center


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    sset = S._set()
    return all(G.conj(s, g) in sset for s in S.elements for g in range(G.order))


def commutator_subgroup(G: FiniteGroup, X: Subgroup, Y: Subgroup) -> Subgroup:
    gens = {G.comm(x, y) for x in X.elements for y in Y.elements}
    return subgroup_closure(G, gens)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    return commutator_subgroup(G, whole_group(G), whole_group(G))


def commutator_with_action(act: GroupAction) -> Subgroup:
    """[N, A] inside N for an external action: closure of n^-1 * a(n)."""
    N = act.target
    gens = {N.mul(N.inv[x], m[x]) for m in act.maps for x in range(N.order)}
    return subgroup_closure(N, gens)


def fixed_points(act: GroupAction) -> Subgroup:
    N = act.target
    out = [x for x in range(N.order) if all(m[x] == x for m in act.maps)]
    return Subgroup(N, tuple(out))


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    target = 1
    n = G.order
    while n % p == 0:
        target *= p
        n //= p
    S = trivial_subgroup(G)
    while S.order < target:
        N = normalizer(G, S)
        sset = S._set()
        grown = False
        for g in N.elements:
            if g in sset:
                continue
            o = G.element_order(g)
            while o % p == 0:
                o //= p
            gp = G.power(g, o)  # the p-part of g
            if gp not in sset:
                T = subgroup_closure(G, set(S.elements) | {gp})
                if target % T.order == 0:
                    S = T
                    grown = True
                    break
        if not grown:
            raise RuntimeError("sylow growth stalled (bug)")
    return S


def conjugate_subgroup(G: FiniteGroup, S: Subgroup, g: int) -> Subgroup:
    return Subgroup(G, tuple(G.conj(s, g) for s in S.elements))


def normal_closure(G: FiniteGroup, seed) -> Subgroup:
    gens = set(seed)
    for s in list(gens):
        for g in range(G.order):
            gens.add(G.conj(s, g))
    S = subgroup_closure(G, gens)
    while not is_normal(G, S):
        gens = set(S.elements)
        for s in S.elements:
            for g in range(G.order):
                gens.add(G.conj(s, g))
        S = subgroup_closure(G, gens)
    return S


def quotient(G: FiniteGroup, N: Subgroup):
    """Quotient group G/N plus the projection map (element -> coset index)."""
    key = N.elements
    if key in G._quotient_cache:
        return G._quotient_cache[key]
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    nset = N._set()
    coset_of = [-1] * G.order
    cosets = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        members = sorted(G.mul(g, x) for x in N.elements)
        idx = len(cosets)
        cosets.append(tuple(members))
        for m in members:
            coset_of[m] = idx
    order = [(min(c), i) for i, c in enumerate(cosets)]
    order.sort()
    relabel = [0] * len(cosets)
    for new, (_, old) in enumerate(order):
        relabel[old] = new
    cosets = [cosets[old] for _, old in order]
    proj = [relabel[coset_of[g]] for g in range(G.order)]
    k = len(cosets)
    table = [[0] * k for _ in range(k)]
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            table[i][j] = proj[G.mul(ci[0], cj[0])]
    Q = FiniteGroup(table, name=f"{G.name or '?'}/N{N.order}")
    result = (Q, proj, tuple(c[0] for c in cosets))
    G._quotient_cache[key] = result
    return result


def as_group(S: Subgroup):
    """Materialize a subgroup as its own FiniteGroup.

    Returns (group, embed, locate) where embed[i] is the parent index of
    local element i and locate maps parent indices back.
    """
    G = S.parent
    key = S.elements
    if key in G._asgroup_cache:
        return G._asgroup_cache[key]
    embed = list(S.elements)
    locate = {g: i for i, g in enumerate(embed)}
    table = [[locate[G.mul(a, b)] for b in embed] for a in embed]
    perms = None
    if G.perm_realization is not None:
        perms = tuple(G.perm_realization[g] for g in embed)
    H = FiniteGroup(table, name=f"{G.name or '?'}[{S.order}]", perm_realization=perms)
    result = (H, tuple(embed), locate)
    G._asgroup_cache[key] = result
    return result


def intersect(S: Subgroup, T: Subgroup) -> Subgroup:
    if S.parent is not T.parent:
        raise HandleMismatch("subgroups of different parents")
    return Subgroup(S.parent, tuple(set(S.elements) & set(T.elements)))


def product_set(G: FiniteGroup, S: Subgroup, T: Subgroup) -> frozenset:
    return frozenset(G.mul(s, t) for s in S.elements for t in T.elements)


def join(S: Subgroup, T: Subgroup) -> Subgroup:
    return subgroup_closure(S.parent, set(S.elements) | set(T.elements))


def complement_search(G: FiniteGroup, K: Subgroup, L: Subgroup,
                      up_to_conjugacy: bool = True) -> list[Subgroup]:
    """All H with HK = G and H \\cap K = L (up to conjugacy by default).

    Backtracking over the quotient G/L: find subgroups W <= G/L with
    W meet K/L = 1 and |W| = |G:K|.
    """
    if not is_normal(G, K) or not is_normal(G, L):
        raise NotNormal("K and L must be normal")
    if not set(L.elements) <= set(K.elements):
        raise NotNormal("L must lie in K")
    Q, proj, sect = quotient(G, L)
    kbar = frozenset(proj[k] for k in K.elements)
    target = G.order // K.order
    found = []

    def extend(sub: frozenset):
        if len(sub) == target:
            found.append(sub)
            return
        for g in range(Q.order):
            if g in sub or g in kbar:
                continue
            new = _closure_q(Q, sub | {g})
            if new is None:
                continue
            if len(new) <= target and target % len(new) == 0 and \
                    all((x not in kbar) or x == Q.identity for x in new):
                if min(new - sub) == g:  # each subgroup has one canonical chain
                    extend(new)

    def _closure_q(Q, seed):
        elems = set(seed) | {Q.identity}
        frontier = list(elems)
        while frontier:
            new = []
            for x in frontier:
                for y in list(elems):
                    for z in (Q.mul(x, y), Q.mul(y, x)):
                        if z not in elems:
                            if len(elems) >= target:
                                return None
                            elems.add(z)
                            new.append(z)
                xi = Q.inv[x]
                if xi not in elems:
                    elems.add(xi)
                    new.append(xi)
            frontier = new
        return frozenset(elems)

    extend(frozenset({Q.identity}))
    subs = sorted(set(found), key=lambda s: tuple(sorted(s)))
    lifted = []
    lset = set(L.elements)
    for w in subs:
        members = sorted(g for g in range(G.order) if proj[g] in w)
        lifted.append(Subgroup(G, tuple(members)))
    if up_to_conjugacy:
        lifted = dedup_up_to_conjugacy(G, lifted)
    return lifted


def dedup_up_to_conjugacy(G: FiniteGroup, subs: list[Subgroup]) -> list[Subgroup]:
    """Keep the lexicographically minimal conjugate of each conjugacy class."""
    reps = []
    seen = set()
    for S in subs:
        if S.elements in seen:
            continue
        orbit = {S.elements}
        frontier = [S.elements]
        while frontier:
            cur = frontier.pop()
            for g in range(G.order):
                img = tuple(sorted(G.conj(s, g) for s in cur))
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        seen |= orbit
        reps.append(Subgroup(G, min(orbit)))
    return sorted(set(reps), key=lambda s: s.elements)


def all_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of single elements."""
    atoms = []
    seen = set()
    for g in range(G.order):
        N = normal_closure(G, {g})
        if N.elements not in seen:
            seen.add(N.elements)
            atoms.append(N)
    result = {t.elements: t for t in atoms}
    frontier = list(atoms)
    while frontier:
        S = frontier.pop()
        for T in atoms:
            J = join(S, T)
            if J.elements not in result:
                result[J.elements] = J
                frontier.append(J)
    out = sorted(result.values(), key=lambda s: (s.order, s.elements))
    return out


def minimal_normal_overgroups(G: FiniteGroup, L: Subgroup, K: Subgroup) -> list[Subgroup]:
    """Minimal G-normal subgroups N with L < N <= K (L, K normal in G)."""
    lset = set(L.elements)
    cands = {}
    for x in K.elements:
        if x in lset:
            continue
        N = normal_closure(G, lset | {x})
        if set(N.elements) <= set(K.elements):
            cands.setdefault(N.elements, N)
    items = sorted(cands.values(), key=lambda s: (s.order, s.elements))
    out = []
    for N in items:
        nset = set(N.elements)
        if not any(set(M.elements) < nset for M in items):
            out.append(N)
    return out


def is_chief_factor(G: FiniteGroup, K: Subgroup, L: Subgroup) -> bool:
    """True iff K/L is a chief factor of G (no normal subgroup strictly between)."""
    mins = minimal_normal_overgroups(G, L, K)
    return len(mins) >= 1 and all(m.elements == K.elements for m in mins) \
        and L.order < K.order


# ---------------------------------------------------------------------------
# Isomorphism utilities (test oracles)
# ---------------------------------------------------------------------------


def fingerprint(G: FiniteGroup):
    """Cheap isomorphism invariant: order, class sizes, element-order histogram."""
    from collections import Counter

    orders = Counter(G.element_order(g) for g in range(G.order))
    sizes = sorted(len(c) for c in _raw_classes(G))
    return (G.order, tuple(sizes), tuple(sorted(orders.items())))


def _raw_classes(G: FiniteGroup):
    seen = [False] * G.order
    out = []
    for g in range(G.order):
        if seen[g]:
            continue
        orb = {G.conj(g, x) for x in range(G.order)}
        for h in orb:
            seen[h] = True
        out.append(sorted(orb))
    return out


def generating_set(G: FiniteGroup) -> list[int]:
    gens = []
    have = subgroup_closure(G, gens)
    for g in range(G.order):
        if g not in have:
            gens.append(g)
            have = subgroup_closure(G, gens)
            if have.order == G.order:
                break
    return gens


def find_isomorphism(G: FiniteGroup, H: FiniteGroup):
    """Exhaustive isomorphism search for small groups; None if not isomorphic."""
    if G.order != H.order:
        return None
    if fingerprint(G) != fingerprint(H):
        return None
    gens = generating_set(G)
    # words expressing every element of G in the generators
    expr = {G.identity: ()}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for i, g in enumerate(gens):
                y = G.mul(x, g)
                if y not in expr:
                    expr[y] = expr[x] + (i,)
                    new.append(y)
        frontier = new

    def build(images):
        phi = {}
        for x, word in expr.items():
            v = H.identity
            for i in word:
                v = H.mul(v, images[i])
            phi[x] = v
        if len(set(phi.values())) != G.order:
            return None
        for a in range(G.order):
            for b in range(G.order):
                if phi[G.mul(a, b)] != H.mul(phi[a], phi[b]):
                    return None
        return phi

    candidates = [
        [h for h in range(H.order) if H.element_order(h) == G.element_order(g)]
        for g in gens
    ]
    for images in itertools.product(*candidates):
        phi = build(list(images))
        if phi is not None:
            return [phi[g] for g in range(G.order)]
    return None
