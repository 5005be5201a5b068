"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored on the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n)
(z = zeta_n, reduced modulo the n-th cyclotomic polynomial) with the
conductor minimized, so structural equality is mathematical equality.
Conductors are normalized to never be congruent to 2 mod 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import DivisionByZero, NotCoprime

Fr = Fraction
_ZERO = Fr(0)


def euler_phi(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            out *= p - 1
            m //= p
            while m % p == 0:
                out *= p
                m //= p
        p += 1
    if m > 1:
        out *= m - 1
    return out


def prime_factors(n: int) -> list[int]:
    out, m, p = [], n, 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly_coeffs(n: int) -> tuple[int, ...]:
    """Monic integer coefficients of Phi_n, ascending degree."""
    # (x^n - 1) / prod of Phi_d over proper divisors d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            div = cyclotomic_poly_coeffs(d)
            poly = _int_poly_div(poly, list(div))
    return tuple(poly)


def _int_poly_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return out


@dataclass(frozen=True)
class _Context:
    n: int
    phi: int
    reductions: tuple[tuple[int, ...], ...]  # zeta^e on power basis, e < max(n, 2*phi)


@lru_cache(maxsize=None)
def _ctx(n: int) -> _Context:
    phi = euler_phi(n)
    coeffs = cyclotomic_poly_coeffs(n)
    rows: list[tuple[int, ...]] = []
    cur = [0] * phi
    cur[0] = 1
    limit = max(n, 2 * phi - 1)
    for _ in range(limit):
        rows.append(tuple(cur))
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for j in range(phi):
                nxt[j] -= top * coeffs[j]
        cur = nxt
    return _Context(n, phi, tuple(rows))


@dataclass(frozen=True)
class Cyclotomic:
    """An element of Q(zeta_n) in canonical reduced form."""

    n: int
    c: tuple[tuple[int, Fraction], ...]  # sorted nonzero (exponent, coeff) pairs

    # -- constructors ------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyclotomic":
        q = Fr(q)
        if q == 0:
            return Cyclotomic(1, ())
        return Cyclotomic(1, ((0, q),))

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        if n < 1:
            raise ValueError("conductor must be positive")
        k %= n
        g = gcd(k, n)
        n, k = n // g, k // g
        # peel the factor 2 off conductors == 2 mod 4: zeta_{2u}^k = (-1)^k zeta_u^{k/2 mod u}
        sign = 1
        if n % 2 == 0 and (n // 2) % 2 == 1 and n > 2:
            u = n // 2
            sign = -1 if k % 2 else 1
            k = (k * pow(2, -1, u)) % u
            n = u
        if n == 1:
            return Cyclotomic.rational(sign)
        if n == 2:
            return Cyclotomic.rational(-sign)
        vec = [_ZERO] * euler_phi(n)
        for j, a in enumerate(_ctx(n).reductions[k]):
            if a:
                vec[j] += Fr(sign * a)
        return _normalize(n, vec)

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.c

    def is_rational(self) -> bool:
        return self.n == 1

    def rational_value(self) -> Fraction:
        if self.n != 1:
            raise ValueError("not a rational value")
        return self.c[0][1] if self.c else _ZERO

    def is_integer(self) -> bool:
        return self.n == 1 and (not self.c or self.c[0][1].denominator == 1)

    def __bool__(self) -> bool:
        return bool(self.c)

    # -- arithmetic ---------------------------------------------------

    def _dense(self, m: int) -> list[Fraction]:
        """Coefficient vector of self in Q(zeta_m), n | m."""
        ctx = _ctx(m)
        vec = [_ZERO] * ctx.phi
        step = m // self.n
        for e, q in self.c:
            for j, a in enumerate(ctx.reductions[e * step]):
                if a:
                    vec[j] += q * a
        return vec

    def __add__(self, other) -> "Cyclotomic":
        other = as_cyclo(other)
        m = _join(self.n, other.n)
        a, b = self._dense(m), other._dense(m)
        return _normalize(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, tuple((e, -q) for e, q in self.c))

    def __sub__(self, other) -> "Cyclotomic":
        return self + (-as_cyclo(other))

    def __rsub__(self, other) -> "Cyclotomic":
        return as_cyclo(other) + (-self)

    def __mul__(self, other) -> "Cyclotomic":
        other = as_cyclo(other)
        if not self.c or not other.c:
            return ZERO
        if self.n == 1:
            q = self.c[0][1]
            return _normalize_sparse(other.n, tuple((e, q * r) for e, r in other.c))
        if other.n == 1:
            q = other.c[0][1]
            return _normalize_sparse(self.n, tuple((e, q * r) for e, r in self.c))
        m = _join(self.n, other.n)
        ctx = _ctx(m)
        sa, sb = m // self.n, m // other.n
        acc: dict[int, Fraction] = {}
        for e1, q1 in self.c:
            for e2, q2 in other.c:
                e = (e1 * sa + e2 * sb) % m
                acc[e] = acc.get(e, _ZERO) + q1 * q2
        vec = [_ZERO] * ctx.phi
        for e, q in acc.items():
            if q:
                for j, a in enumerate(ctx.reductions[e]):
                    if a:
                        vec[j] += q * a
        return _normalize(m, vec)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.c:
            raise DivisionByZero("inverse of zero")
        if self.n == 1:
            return Cyclotomic.rational(1 / self.c[0][1])
        ctx = _ctx(self.n)
        phi = ctx.phi
        # columns: self * zeta^j on the power basis; solve M x = e0
        cols = []
        for j in range(phi):
            prod = self * Cyclotomic(self.n, ((j, Fr(1)),)) if j else self
            cols.append(prod._dense(self.n))
        mat = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [Fr(1)] + [_ZERO] * (phi - 1)
        sol = _solve_exact(mat, rhs)
        if sol is None:
            raise DivisionByZero("element is a zero divisor (impossible in a field)")
        return Cyclotomic(self.n, _sparsify(sol))

    def __truediv__(self, other) -> "Cyclotomic":
        return self * as_cyclo(other).inverse()

    def __rtruediv__(self, other) -> "Cyclotomic":
        return as_cyclo(other) * self.inverse()

    def galois(self, k: int) -> "Cyclotomic":
        """Apply zeta_n -> zeta_n^k; k must be coprime to the conductor."""
        if self.n == 1:
            return self
        if gcd(k, self.n) != 1:
            raise NotCoprime(f"galois exponent {k} not coprime to conductor {self.n}")
        ctx = _ctx(self.n)
        vec = [_ZERO] * ctx.phi
        for e, q in self.c:
            for j, a in enumerate(ctx.reductions[(e * k) % self.n]):
                if a:
                    vec[j] += q * a
        # Galois images of conductor-minimal elements stay conductor-minimal
        return Cyclotomic(self.n, _sparsify(vec))

    def conjugate(self) -> "Cyclotomic":
        if self.n == 1:
            return self
        return self.galois(self.n - 1)

    def abs_squared(self) -> "Cyclotomic":
        return self * self.conjugate()

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "c": {str(e): _fr_str(q) for e, q in self.c}}

    @staticmethod
    def from_json(obj: dict) -> "Cyclotomic":
        n = int(obj["n"])
        vec = [_ZERO] * euler_phi(n)
        for e, s in obj["c"].items():
            vec[int(e)] += Fraction(s)
        return _normalize(n, vec)

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        if self.n == 1:
            return str(self.c[0][1])
        parts = []
        for e, q in self.c:
            z = f"z{self.n}^{e}" if e > 1 else ("z%d" % self.n if e == 1 else "")
            if e == 0:
                parts.append(str(q))
            elif q == 1:
                parts.append(z)
            elif q == -1:
                parts.append("-" + z)
            else:
                parts.append(f"{q}*{z}")
        return "+".join(parts).replace("+-", "-")


def _fr_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_cyclo(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    raise TypeError(f"cannot coerce {x!r} to Cyclotomic")


ZERO = Cyclotomic(1, ())
ONE = Cyclotomic(1, ((0, Fr(1)),))


def _join(n1: int, n2: int) -> int:
    return lcm(n1, n2)


def _sparsify(vec: list[Fraction]) -> tuple[tuple[int, Fraction], ...]:
    return tuple((e, q) for e, q in enumerate(vec) if q)


def _normalize_sparse(n, pairs) -> Cyclotomic:
    vec = [_ZERO] * euler_phi(n)
    for e, q in pairs:
        vec[e] = q
    return _normalize(n, vec)


def _normalize(n: int, vec: list[Fraction]) -> Cyclotomic:
    """Minimize the conductor of the element given on the power basis of Q(zeta_n)."""
    while True:
        if n == 1:
            return Cyclotomic(1, _sparsify(vec[:1]))
        if all(q == 0 for q in vec):
            return ZERO
        descended = False
        for p in prime_factors(n):
            d = n // p
            if d % 2 == 0 and (d // 2) % 2 == 1:
                d //= 2
            if d == n or n % d != 0:
                continue
            sub = _subfield_coords(n, d, vec)
            if sub is not None:
                n, vec = d, sub
                descended = True
                break
        if not descended:
            return Cyclotomic(n, _sparsify(vec))


@lru_cache(maxsize=None)
def _descent_matrix(n: int, d: int):
    """Columns express the power basis of Q(zeta_d) inside Q(zeta_n)."""
    ctx = _ctx(n)
    step = n // d
    cols = [ctx.reductions[step * j] for j in range(euler_phi(d))]
    return [[Fr(cols[j][i]) for j in range(len(cols))] for i in range(ctx.phi)]


def _subfield_coords(n: int, d: int, vec: list[Fraction]):
    mat = _descent_matrix(n, d)
    return _solve_exact([row[:] for row in mat], vec)


def _solve_exact(mat: list[list[Fraction]], rhs: list[Fraction]):
    """Solve mat * x = rhs exactly; None if inconsistent. mat is modified."""
    rows, cols = len(mat), len(mat[0]) if mat else 0
    b = list(rhs)
    piv_of_col = [-1] * cols
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        b[r], b[p] = b[p], b[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        b[r] = b[r] * inv
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
                b[i] = b[i] - f * b[r]
        piv_of_col[c] = r
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if b[i] != 0:
            return None
    # rows r..: check zero rows with nonzero rhs above; also rows beyond pivots
    for i in range(rows):
        if all(x == 0 for x in mat[i]) and b[i] != 0:
            return None
    x = [_ZERO] * cols
    for c in range(cols):
        if piv_of_col[c] >= 0:
            x[c] = b[piv_of_col[c]]
    return x


# ---------------------------------------------------------------------------
# Number field descriptors: cyclotomic fields with a Galois stabilizer.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NumberFieldDescriptor:
    """The subfield of Q(zeta_n) fixed by the given subgroup of (Z/n)*.

    Canonical form: n is the conductor of the field itself (minimal, never
    2 mod 4); for n = 1 the stabilizer is the trivial unit group {0}.
    """

    n: int
    stabilizer: frozenset

    def degree(self) -> int:
        if self.n == 1:
            return 1
        return euler_phi(self.n) // len(self.stabilizer)

    def contains(self, x: Cyclotomic) -> bool:
        if x.n == 1:
            return True
        if self.n % x.n != 0:
            return False
        return all(k % x.n == 1 for k in self.stabilizer)

    def to_json(self) -> dict:
        return {"n": self.n, "stabilizer": sorted(self.stabilizer)}


QQ = NumberFieldDescriptor(1, frozenset({0}))


def units_mod(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [k for k in range(1, n) if gcd(k, n) == 1]


def galois_over(n: int, field: NumberFieldDescriptor) -> list[int]:
    """Exponents k in (Z/n)* whose Galois action fixes `field` pointwise.

    Requires field.n | n (the field must embed into Q(zeta_n)).
    """
    if n == 1:
        return [0]
    if n % field.n != 0:
        raise ValueError("field does not embed into Q(zeta_%d)" % n)
    if field.n == 1:
        return units_mod(n)
    return [k for k in units_mod(n) if k % field.n in field.stabilizer]


def field_of_values(values) -> NumberFieldDescriptor:
    """Smallest cyclotomic field containing all the values, as a descriptor."""
    n = 1
    vals = [as_cyclo(v) for v in values]
    for v in vals:
        n = lcm(n, v.n)
    if n == 1:
        return QQ
    stab = frozenset(k for k in units_mod(n)
                     if all(v.n == 1 or v.galois(k % v.n) == v for v in vals))
    return _canonical_descriptor(n, stab)


def _canonical_descriptor(n: int, stab: frozenset) -> NumberFieldDescriptor:
    """Reduce a (conductor, stabilizer) pair to minimal conductor."""
    if n == 1:
        return QQ
    for d in sorted(_divisors(n)):
        if d != 1 and d % 4 == 2:
            continue
        # field lies in Q(zeta_d) iff everything fixing Q(zeta_d) fixes the field
        if all(k in stab for k in units_mod(n) if k % d == 1 % d):
            if d == 1:
                return QQ
            proj = frozenset(k % d for k in stab)
            return NumberFieldDescriptor(d, proj)
    return NumberFieldDescriptor(n, stab)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def contains_root_of_unity(field: NumberFieldDescriptor, e: int) -> bool:
    """Test zeta_e in the field described by `field`."""
    z = Cyclotomic.zeta(e, 1)
    if z.n == 1:
        return True
    return field.contains(z)


def is_subfield(inner: NumberFieldDescriptor, outer: NumberFieldDescriptor) -> bool:
    """Test whether the field `inner` is contained in the field `outer`."""
    if inner.n == 1:
        return True
    m = lcm(inner.n, outer.n)
    inner_stab = {s % inner.n for s in inner.stabilizer}
    for k in units_mod(m):
        fixes_outer = (outer.n == 1) or (k % outer.n in outer.stabilizer)
        if fixes_outer and k % inner.n not in inner_stab:
            return False
    return True
