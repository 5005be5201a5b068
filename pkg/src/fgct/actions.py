"""Named automorphisms for the bundled catalog groups.

Each builder returns a permutation of the group's element indices; these are
the actions the CLI exposes by name.  The extraspecial actions all fix the
center pointwise and are defined for exponent-p groups, whose elements are
Heisenberg triples (a, b, c) over F_p.
"""

from __future__ import annotations

from .errors import InvalidAction, UnknownCatalogEntry
from .groups import FiniteGroup, GroupAction, cyclic, extraspecial


def _heisenberg_index(G: FiniteGroup):
    """Invert the element ordering used by extraspecial(p, 'p')."""
    p = round(G.order ** (1 / 3))
    if p ** 3 != G.order:
        raise InvalidAction("group is not of order p^3")

    def decode(i):
        a, r = divmod(i, p * p)
        b, c = divmod(r, p)
        return a, b, c

    def encode(a, b, c):
        return (a % p) * p * p + (b % p) * p + (c % p)

    return p, decode, encode


def inversion(G: FiniteGroup) -> tuple:
    """x -> x^-1; an automorphism exactly when G is abelian."""
    if not G.is_abelian():
        raise InvalidAction("inversion is only an automorphism of abelian groups")
    return tuple(G.inv)


def inversion_mod_center(G: FiniteGroup) -> tuple:
    """(a,b,c) -> (-a,-b,c): inverts G/Z(G), fixes the center pointwise."""
    p, dec, enc = _heisenberg_index(G)
    return tuple(enc(-a, -b, c) for a, b, c in map(dec, range(G.order)))


def symplectic_order_4(G: FiniteGroup) -> tuple:
    """Order-4 symplectic rotation (a,b,c) -> (-b, a, c-ab); square is
    inversion mod center; fixed points = center."""
    p, dec, enc = _heisenberg_index(G)
    return tuple(enc(-b, a, c - a * b) for a, b, c in map(dec, range(G.order)))


def fixed_point_free_order_3(G: FiniteGroup) -> tuple:
    """Order-3 action (a,b,c) -> (-b, a-b, c+delta(a,b)) from the symplectic
    matrix [[0,-1],[1,-1]]; fixed-point free on G/Z when x^2+x+1 has no root
    mod p (e.g. p = 5)."""
    p, dec, enc = _heisenberg_index(G)
    if p % 3 == 1:
        raise InvalidAction(f"x^2+x+1 has a root mod {p}; action has fixed points")
    half = pow(2, -1, p)
    # delta(v) = B(v,v)/2 with B(u,v) = beta(Mu, Mv) - beta(u, v), beta((a,b),(d,e)) = a*e
    def delta(a, b):
        return ((b * b - 2 * a * b) * half) % p

    return tuple(enc(-b, a - b, c + delta(a, b)) for a, b, c in map(dec, range(G.order)))


NAMED_ACTIONS = {
    "trivial": lambda G: tuple(range(G.order)),
    "inversion": inversion,
    "inversion-mod-center": inversion_mod_center,
    "symplectic-order-4": symplectic_order_4,
    "fixed-point-free-order-3": fixed_point_free_order_3,
}


def named_action_map(name: str, G: FiniteGroup) -> tuple:
    try:
        builder = NAMED_ACTIONS[name]
    except KeyError:
        raise UnknownCatalogEntry(f"unknown action {name!r}") from None
    return builder(G)


def cyclic_action(N: FiniteGroup, n_actor: int, generator_map) -> GroupAction:
    """Action of C_{n_actor} on N generated by one automorphism."""
    A = cyclic(n_actor)
    maps = [tuple(range(N.order))]
    cur = tuple(range(N.order))
    for _ in range(1, n_actor):
        cur = tuple(generator_map[cur[x]] for x in range(N.order))
    # maps[a] must satisfy maps[a1+a2] = maps[a1] o maps[a2]
    maps = []
    cur = tuple(range(N.order))
    for _ in range(n_actor):
        maps.append(cur)
        cur = tuple(generator_map[cur[x]] for x in range(N.order))
    if cur != tuple(range(N.order)):
        raise InvalidAction(
            f"generator has order not dividing {n_actor}")
    return GroupAction(A, N, tuple(maps)).validate()


def standard_setup(n_spec: FiniteGroup, a_order: int, action_name: str) -> GroupAction:
    gen = named_action_map(action_name, n_spec)
    return cyclic_action(n_spec, a_order, gen)
