"""Conjugacy classes, exact character tables, and the class-function calculus.

Tables are computed by the Dixon-Schneider method: the class-multiplication
matrices are simultaneously diagonalized over GF(p) for a prime
p = 1 (mod exp(G)) with p > 2*sqrt(|G|), and the mod-p character values are
lifted to exact cyclotomics through the eigenvalue multiplicities of each
element's power sequence.  All arithmetic after the lift is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from sympy import isprime, primitive_root
from sympy.ntheory.residue_ntheory import sqrt_mod

from .cyclo import Cyclotomic, NumberFieldDescriptor, field_of_values
from .errors import (
    HandleMismatch,
    InternalCheckFailed,
    NotCoprime,
    NotCyclic,
    NotGenuineCharacter,
    NotInvariant,
    NotIrreducible,
    NotNormal,
)
from .groups import FiniteGroup, Subgroup, as_group, is_normal, quotient

Fr = Fraction
ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


# ---------------------------------------------------------------------------
# Conjugacy classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassData:
    group: FiniteGroup
    classes: tuple            # tuple of sorted element tuples
    reps: tuple               # class representatives (minimal elements)
    class_of: tuple           # element index -> class index
    sizes: tuple
    centralizer_orders: tuple
    inverse_map: tuple        # class index -> class index of inverses

    def power_map(self, k: int) -> tuple:
        return tuple(self.class_of[self.group.power(r, k)] for r in self.reps)

    def power_maps_primes(self) -> dict:
        out = {}
        e = self.group.exponent()
        p = 2
        while p <= e:
            if isprime(p):
                out[p] = self.power_map(p)
            p += 1
        return out


def conjugacy_classes(G: FiniteGroup) -> ClassData:
    if G._classdata is not None:
        return G._classdata
    seen = [False] * G.order
    raw = []
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            x = frontier.pop()
            for y in range(G.order):
                z = G.conj(x, y)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        orbit = tuple(sorted(orbit))
        for h in orbit:
            seen[h] = True
        raw.append(orbit)
    # identity class first, then by (size, minimal element)
    ident = next(c for c in raw if G.identity in c)
    rest = sorted((c for c in raw if c is not ident), key=lambda c: (len(c), c[0]))
    classes = tuple([ident] + rest)
    class_of = [0] * G.order
    for i, c in enumerate(classes):
        for x in c:
            class_of[x] = i
    reps = tuple(c[0] for c in classes)
    sizes = tuple(len(c) for c in classes)
    inv_map = tuple(class_of[G.inv[r]] for r in reps)
    data = ClassData(G, classes, reps, tuple(class_of), sizes,
                     tuple(G.order // s for s in sizes), inv_map)
    G._classdata = data
    return data


# ---------------------------------------------------------------------------
# Class functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassFunction:
    group: FiniteGroup
    values: tuple  # one Cyclotomic per conjugacy class

    def value_at(self, g: int) -> Cyclotomic:
        return self.values[conjugacy_classes(self.group).class_of[g]]

    def degree(self) -> Cyclotomic:
        return self.values[0]

    def degree_int(self) -> int:
        d = self.values[0]
        if not d.is_integer():
            raise NotGenuineCharacter("degree is not an integer")
        return int(d.rational_value())

    def __add__(self, other):
        self._chk(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._chk(other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._chk(other)
            return ClassFunction(self.group,
                                 tuple(a * b for a, b in zip(self.values, other.values)))
        c = other if isinstance(other, Cyclotomic) else Cyclotomic.rational(other)
        return ClassFunction(self.group, tuple(a * c for a in self.values))

    __rmul__ = __mul__

    def conjugate(self):
        return ClassFunction(self.group, tuple(v.conjugate() for v in self.values))

    def galois(self, k: int):
        return galois_conjugate_character(self, k)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def field(self) -> NumberFieldDescriptor:
        return field_of_values(self.values)

    def _chk(self, other):
        if self.group is not other.group:
            raise HandleMismatch("class functions on different groups")

    def sort_key(self):
        return tuple((v.n, v.c) for v in self.values)

    def to_json(self):
        return [v.to_json() for v in self.values]


def trivial_character(G: FiniteGroup) -> ClassFunction:
    k = len(conjugacy_classes(G).classes)
    return ClassFunction(G, (ONE,) * k)


def zero_class_function(G: FiniteGroup) -> ClassFunction:
    k = len(conjugacy_classes(G).classes)
    return ClassFunction(G, (ZERO,) * k)


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:
    """(a, b) = |G|^-1 sum a(g) conj(b(g)), exactly."""
    a._chk(b)
    data = conjugacy_classes(a.group)
    acc = Cyclotomic.rational(0)
    for size, x, y in zip(data.sizes, a.values, b.values):
        if x.is_zero() or y.is_zero():
            continue
        acc = acc + Cyclotomic.rational(size) * x * y.conjugate()
    return acc * Cyclotomic.rational(Fr(1, a.group.order))


def inner_product_int(a: ClassFunction, b: ClassFunction) -> int:
    v = inner_product(a, b)
    if not v.is_integer():
        raise InternalCheckFailed(f"inner product not a rational integer: {v!r}")
    return int(v.rational_value())


def restrict_to_subgroup(chi: ClassFunction, S: Subgroup) -> ClassFunction:
    """Restriction to a subgroup, as a class function on as_group(S)."""
    if S.parent is not chi.group:
        raise HandleMismatch("subgroup of a different group")
    H, embed, _ = as_group(S)
    data = conjugacy_classes(H)
    vals = tuple(chi.value_at(embed[r]) for r in data.reps)
    return ClassFunction(H, vals)


def induce_from_subgroup(G: FiniteGroup, S: Subgroup, alpha: ClassFunction) -> ClassFunction:
    """Induction of a class function on as_group(S) up to G."""
    H, embed, locate = as_group(S)
    if alpha.group is not H:
        raise HandleMismatch("class function is not on the subgroup")
    data = conjugacy_classes(G)
    scale = Cyclotomic.rational(Fr(1, H.order))
    values = []
    for r in data.reps:
        acc = Cyclotomic.rational(0)
        for x in range(G.order):
            y = G.conj(r, x)
            if y in locate:
                acc = acc + alpha.value_at(locate[y])
        values.append(acc * scale)
    return ClassFunction(G, tuple(values))


def tensor(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    return a * b


# ---------------------------------------------------------------------------
# GF(p) linear algebra (internal to the table computation)
# ---------------------------------------------------------------------------


def _rref(mat, p):
    mat = [row[:] for row in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat[:r], pivots


def _nullspace(mat, p):
    """Basis of the right nullspace of mat over GF(p)."""
    cols = len(mat[0])
    red, pivots = _rref(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-red[r][f]) % p
        basis.append(v)
    return basis


def _solve_matrix(B, C, p):
    """Solve B X = C column-wise over GF(p); B has full column rank."""
    rows, cols = len(B), len(B[0])
    rhs_cols = len(C[0])
    aug = [B[i][:] + C[i][:] for i in range(rows)]
    red, pivots = _rref(aug, p)
    if any(c >= cols for c in pivots):
        raise InternalCheckFailed("inconsistent restriction system")
    X = [[0] * rhs_cols for _ in range(cols)]
    for r, c in enumerate(pivots):
        for j in range(rhs_cols):
            X[c][j] = red[r][cols + j]
    return X


def _charpoly(A, p):
    """Characteristic polynomial over GF(p) via Hessenberg reduction."""
    n = len(A)
    H = [row[:] for row in A]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if H[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            H[j + 1], H[piv] = H[piv], H[j + 1]
            for i in range(n):
                H[i][j + 1], H[i][piv] = H[i][piv], H[i][j + 1]
        inv = pow(H[j + 1][j], -1, p)
        for i in range(j + 2, n):
            if H[i][j]:
                f = (H[i][j] * inv) % p
                H[i] = [(x - f * y) % p for x, y in zip(H[i], H[j + 1])]
                for r in range(n):
                    H[r][j + 1] = (H[r][j + 1] + f * H[r][i]) % p
    # charpoly recurrence on the Hessenberg form, ascending coefficients
    polys = [[1]]
    for m in range(1, n + 1):
        poly = [0] + polys[m - 1]
        diag = H[m - 1][m - 1]
        poly = [(a - diag * b) % p for a, b in zip(poly, polys[m - 1] + [0])]
        mult = 1
        for i in range(m - 2, -1, -1):
            mult = (mult * H[i + 1][i]) % p
            term = (H[i][m - 1] * mult) % p
            if term:
                poly = [(a - term * b) % p
                        for a, b in zip(poly, polys[i] + [0] * (len(poly) - len(polys[i])))]
        polys.append([x % p for x in poly])
    return polys[n]


def _poly_roots(coeffs, p):
    return [x for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0]


# ---------------------------------------------------------------------------
# Dixon-Schneider character table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CharacterTable:
    data: ClassData
    irr: tuple       # ClassFunctions
    degrees: tuple

    @property
    def group(self) -> FiniteGroup:
        return self.data.group

    def index_of(self, chi: ClassFunction) -> int:
        return self.irr.index(chi)


def dixon_prime(order: int, exponent: int) -> int:
    p = max(2 * isqrt(order), 2) + 1
    while True:
        if p % exponent == 1 % exponent and isprime(p):
            return p
        p += 1


def character_table(G: FiniteGroup) -> CharacterTable:
    if G._chartable is not None:
        return G._chartable
    data = conjugacy_classes(G)
    k = len(data.classes)
    e = G.exponent()
    p = dixon_prime(G.order, e)

    # class multiplication coefficients: M[i][j][t] = #{x in C_i : x^{-1} z_t in C_j}
    def class_matrix(i):
        M = [[0] * k for _ in range(k)]
        for t, z in enumerate(data.reps):
            row = M[t]
            for x in data.classes[i]:
                j = data.class_of[G.mul(G.inv[x], z)]
                row[j] += 1
        # (M_i u)_j = sum_t a_{ijt} u_t with a_{ijt} read off M[j-as-t]...
        # orientation: we built rows indexed by t=product class; transpose so
        # that (Mat u)_j = sum_t a_{i j t} u_t.
        return [[M[t][j] for t in range(k)] for j in range(k)]

    spaces = [[_unit(k, i) for i in range(k)]]  # list of bases (lists of column vecs)
    for i in range(1, k):
        if all(len(b) == 1 for b in spaces):
            break
        Mi = None
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            if Mi is None:
                Mi = class_matrix(i)
            B = [[basis[j][r] for j in range(len(basis))] for r in range(k)]
            MB = [[sum(Mi[r][s] * B[s][j] for s in range(k)) % p
                   for j in range(len(basis))] for r in range(k)]
            A = _solve_matrix(B, MB, p)
            roots = _poly_roots(_charpoly(A, p), p)
            for lam in roots:
                shifted = [[(A[r][c] - (lam if r == c else 0)) % p
                            for c in range(len(A))] for r in range(len(A))]
                sub = []
                for coords in _nullspace(shifted, p):
                    vec = [sum(B[r][j] * coords[j] for j in range(len(coords))) % p
                           for r in range(k)]
                    sub.append(vec)
                if sub:
                    new_spaces.append(sub)
        spaces = [b for b in new_spaces if any(any(x) for x in b)]
    if len(spaces) != k or any(len(b) != 1 for b in spaces):
        raise InternalCheckFailed("eigenspace refinement did not reach dimension 1")

    order_mod = G.order % p
    z_root = primitive_root(p)
    inv_sizes = [pow(s % p, -1, p) for s in data.sizes]

    # element orders and power-class tables per class
    rep_orders = [G.element_order(r) for r in data.reps]
    power_class = []
    for r, m in zip(data.reps, rep_orders):
        row, x = [], G.identity
        for _ in range(m):
            row.append(data.class_of[x])
            x = G.mul(x, r)
        power_class.append(row)

    characters = []
    for (u,) in spaces:
        if u[0] == 0:
            raise InternalCheckFailed("eigenvector vanishes on the identity class")
        norm = pow(u[0], -1, p)
        u = [(x * norm) % p for x in u]
        s = sum(u[t] * u[data.inverse_map[t]] % p * inv_sizes[t] for t in range(k)) % p
        d2 = (order_mod * pow(s, -1, p)) % p
        d = _sqrt_mod(d2, p)
        if d is None:
            raise InternalCheckFailed("degree is not a square mod p")
        if d > p // 2:
            d = p - d
        vals_mod = [(d * u[t]) % p * inv_sizes[t] % p for t in range(k)]
        values = []
        for t in range(k):
            m = rep_orders[t]
            if m == 1:
                values.append(Cyclotomic.rational(d))
                continue
            eta = pow(z_root, (p - 1) // m, p)
            w = [vals_mod[power_class[t][s_]] for s_ in range(m)]
            minv = pow(m, -1, p)
            val = Cyclotomic.rational(0)
            for j in range(m):
                cj = sum(w[s_] * pow(eta, (-j * s_) % (p - 1), p) for s_ in range(m))
                cj = (cj * minv) % p
                if cj > d:
                    raise InternalCheckFailed("eigenvalue multiplicity exceeds degree")
                if cj:
                    val = val + Cyclotomic.rational(cj) * Cyclotomic.zeta(m, j)
            values.append(val)
        characters.append(ClassFunction(G, tuple(values)))

    characters.sort(key=lambda c: (c.degree_int(), not all(v == ONE for v in c.values),
                                   c.sort_key()))
    table = CharacterTable(data, tuple(characters), tuple(c.degree_int() for c in characters))
    _verify_table(table)
    G._chartable = table
    return table


def _unit(k, i):
    v = [0] * k
    v[i] = 1
    return v


def _sqrt_mod(a, p):
    return sqrt_mod(a % p, p)


def _verify_table(table: CharacterTable):
    G = table.group
    k = len(table.data.classes)
    if sum(d * d for d in table.degrees) != G.order:
        raise InternalCheckFailed("sum of squared degrees != |G|")
    for d in table.degrees:
        if G.order % d != 0:
            raise InternalCheckFailed("character degree does not divide |G|")
    for i, a in enumerate(table.irr):
        for j, b in enumerate(table.irr):
            v = inner_product(a, b)
            want = 1 if i == j else 0
            if not (v.is_rational() and v.rational_value() == want):
                raise InternalCheckFailed(f"row orthogonality fails at ({i},{j})")
    for s in range(k):
        for t in range(k):
            acc = Cyclotomic.rational(0)
            for chi in table.irr:
                acc = acc + chi.values[s] * chi.values[t].conjugate()
            want = table.data.centralizer_orders[s] if s == t else 0
            if not (acc.is_rational() and acc.rational_value() == want):
                raise InternalCheckFailed(f"column orthogonality fails at ({s},{t})")


# ---------------------------------------------------------------------------
# Derived operations
# ---------------------------------------------------------------------------


def decompose(chi: ClassFunction, table: CharacterTable = None) -> list:
    """Multiplicities of chi against Irr(G); raises if they are not integers."""
    table = table or character_table(chi.group)
    out = []
    for irr in table.irr:
        v = inner_product(chi, irr)
        if not v.is_integer():
            raise NotGenuineCharacter(f"non-integral multiplicity {v!r}")
        out.append(int(v.rational_value()))
    return out


def is_genuine_character(chi: ClassFunction) -> bool:
    try:
        mults = decompose(chi)
    except NotGenuineCharacter:
        return False
    return all(m >= 0 for m in mults)


def constituents(chi: ClassFunction) -> list:
    """Irreducible constituents with positive multiplicity, with multiplicities."""
    table = character_table(chi.group)
    mults = decompose(chi, table)
    return [(table.irr[i], m) for i, m in enumerate(mults) if m != 0]


def irr_over(G: FiniteGroup, L: Subgroup, phi: ClassFunction) -> list:
    """Irr(G | phi) = irreducibles whose restriction to L contains phi."""
    if not is_normal(G, L):
        raise NotNormal("L must be normal in G")
    H, _, _ = as_group(L)
    if phi.group is not H:
        raise HandleMismatch("phi must live on as_group(L)")
    if not _is_irreducible(phi):
        raise NotIrreducible("phi is not irreducible")
    out = []
    for chi in character_table(G).irr:
        if inner_product_int(restrict_to_subgroup(chi, L), phi) > 0:
            out.append(chi)
    return out


def _is_irreducible(chi: ClassFunction) -> bool:
    v = inner_product(chi, chi)
    return v.is_rational() and v.rational_value() == 1 and is_genuine_character(chi)


def galois_conjugate_character(chi: ClassFunction, k: int) -> ClassFunction:
    e = chi.group.exponent()
    if gcd(k, e) != 1:
        raise NotCoprime(f"{k} is not coprime to the exponent {e}")
    vals = tuple(v if v.n == 1 else v.galois(k % v.n) for v in chi.values)
    return ClassFunction(chi.group, vals)


def eigenvalue_multiset(chi: ClassFunction, g: int) -> list:
    """Multiplicities c_j of zeta_m^j in the eigenvalue multiset of g,
    recovered from the values of chi on the powers of g."""
    G = chi.group
    m = G.element_order(g)
    w = []
    x = G.identity
    for _ in range(m):
        w.append(chi.value_at(x))
        x = G.mul(x, g)
    out = []
    minv = Cyclotomic.rational(Fr(1, m))
    for j in range(m):
        acc = Cyclotomic.rational(0)
        for s, ws in enumerate(w):
            if not ws.is_zero():
                acc = acc + ws * Cyclotomic.zeta(m, (-j * s) % m)
        cj = acc * minv
        if not cj.is_integer():
            raise NotGenuineCharacter("eigenvalue multiplicity is not an integer")
        cj = int(cj.rational_value())
        if cj < 0:
            raise NotGenuineCharacter("negative eigenvalue multiplicity")
        out.append(cj)
    return out


def determinant_character(chi: ClassFunction) -> ClassFunction:
    """det(chi) per class, from the eigenvalue multiset at each representative."""
    if not is_genuine_character(chi):
        raise NotGenuineCharacter("determinant needs a genuine character")
    G = chi.group
    data = conjugacy_classes(G)
    vals = []
    for r in data.reps:
        m = G.element_order(r)
        mults = eigenvalue_multiset(chi, r)
        exp = sum(j * c for j, c in enumerate(mults)) % m
        vals.append(Cyclotomic.zeta(m, exp))
    return ClassFunction(G, tuple(vals))


def determinantal_order(chi: ClassFunction) -> int:
    return linear_character_order(determinant_character(chi))


def linear_character_order(lam: ClassFunction) -> int:
    """Order of a linear character in the dual group."""
    data = conjugacy_classes(lam.group)
    order = 1
    for v in lam.values:
        m = 1
        w = v
        while w != ONE:
            w = w * v
            m += 1
            if m > lam.group.order:
                raise InternalCheckFailed("linear character value is not a root of unity")
        order = order * m // gcd(order, m)
    return order


def _cyclo_pow(v: Cyclotomic, d: int) -> Cyclotomic:
    out = ONE
    for _ in range(d):
        out = out * v
    return out


def extensions_cyclic(G: FiniteGroup, L: Subgroup, phi: ClassFunction) -> list:
    """All extensions of phi to G when G/L is cyclic and phi is G-invariant."""
    Q, proj, _ = quotient(G, L)
    if not _group_is_cyclic(Q):
        raise NotCyclic("G/L is not cyclic")
    H, embed, _ = as_group(L)
    if phi.group is not H:
        raise HandleMismatch("phi must live on as_group(L)")
    _require_invariant(G, L, phi)
    exts = [chi for chi in irr_over(G, L, phi)
            if restrict_to_subgroup(chi, L) == phi]
    if len(exts) != Q.order:
        raise InternalCheckFailed("wrong number of extensions for a cyclic quotient")
    return exts


def _group_is_cyclic(Q: FiniteGroup) -> bool:
    return any(Q.element_order(g) == Q.order for g in range(Q.order))


def conjugate_character_on_subgroup(G: FiniteGroup, L: Subgroup,
                                    phi: ClassFunction, g: int) -> ClassFunction:
    """phi^g on L (requires g to normalize L): phi^g(x) = phi(g x g^-1)."""
    H, embed, locate = as_group(L)
    data = conjugacy_classes(H)
    vals = []
    gi = G.inv[g]
    for r in data.reps:
        y = G.conj(embed[r], gi)  # g * x * g^-1
        if y not in locate:
            raise NotNormal("conjugation does not preserve the subgroup")
        vals.append(phi.value_at(locate[y]))
    return ClassFunction(H, tuple(vals))


def _require_invariant(G: FiniteGroup, L: Subgroup, phi: ClassFunction):
    for g in range(G.order):
        if conjugate_character_on_subgroup(G, L, phi, g) != phi:
            raise NotInvariant(f"character is not invariant under element {g}")


def is_invariant_under(G: FiniteGroup, L: Subgroup, phi: ClassFunction, gens) -> bool:
    return all(conjugate_character_on_subgroup(G, L, phi, g) == phi for g in gens)


def inflate(G: FiniteGroup, proj, chi_q: ClassFunction) -> ClassFunction:
    """Inflation of a class function on a quotient (proj: element -> coset)."""
    data = conjugacy_classes(G)
    return ClassFunction(G, tuple(chi_q.value_at(proj[r]) for r in data.reps))


def deflate(Q: FiniteGroup, proj, chi: ClassFunction) -> ClassFunction:
    """View a class function with the kernel of proj in its kernel on the quotient."""
    dataq = conjugacy_classes(Q)
    G = chi.group
    sect = {}
    for g in range(G.order):
        sect.setdefault(proj[g], g)
    return ClassFunction(Q, tuple(chi.value_at(sect[r]) for r in dataq.reps))
