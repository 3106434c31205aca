"""Sylow and Hall subgroups of nilpotent permutation groups.

A finite group is nilpotent exactly when it is the direct product of its
Sylow subgroups. For such a group the map ``g -> g_p`` (the p-part of ``g``)
is the projection onto the Sylow p-factor, so the p-parts of a generating set
generate the Sylow p-subgroup. That projection is the only Sylow
construction offered here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import DecompositionFailed, NotNilpotent
from .perm import (PermGroup, Permutation, direct_product_action,
                   induced_action, orbits)


def factorize(n):
    """Prime factorization of ``n`` as a dict ``{p: exponent}``."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p):
    return p >= 2 and factorize(p) == {p: 1}


def prime_divisors(n):
    return PrimeSet(factorize(n))


class PrimeSet(frozenset):
    """A set of primes; iteration is in increasing order."""

    def __new__(cls, primes=()):
        primes = frozenset(int(p) for p in primes)
        bad = [p for p in primes if not is_prime(p)]
        if bad:
            raise ValueError(f"not prime: {sorted(bad)}")
        return super().__new__(cls, primes)

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self):
        return f"PrimeSet({list(self)})"


def n_pi(n, pi):
    """Largest divisor of ``n`` whose prime divisors all lie in ``pi``.

    Primes of ``pi`` not dividing ``n`` contribute nothing.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for p, e in factorize(n).items():
        if p in pi:
            out *= p**e
    return out


def is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def p_part(g, p):
    """The p-part ``g**e`` of ``g``, with ``e = 1 mod p^a`` and ``e = 0 mod m``.

    Here ``ord(g) = p^a * m`` with ``p`` not dividing ``m``.
    """
    order = g.order()
    pa = n_pi(order, {p})
    m = order // pa
    if pa == 1:
        return Permutation.identity(g.degree)
    e = m * pow(m, -1, pa)
    return g ** e


@dataclass(frozen=True)
class SylowDecomposition:
    parent: PermGroup
    parts: tuple  # ((p, P_p), ...) by increasing p

    def part(self, p):
        for q, P in self.parts:
            if q == p:
                return P
        return PermGroup.trivial(self.parent.degree)

    @property
    def primes(self):
        return PrimeSet(p for p, _ in self.parts)


def _is_normal(P, G):
    return all(P.contains(g.inverse() * x * g) for g in G.generators for x in P.generators)


def _sylow_candidate(G, p):
    gens = [p_part(g, p) for g in G.generators]
    return PermGroup(G.degree, [x for x in gens if not x.is_identity()])


def sylow_subgroup(G, p):
    """The unique Sylow p-subgroup of a nilpotent group ``G``.

    Raises NotNilpotent when the projected generators do not generate a
    normal subgroup of order ``|G|_p``.
    """
    P = _sylow_candidate(G, p)
    if not is_p_power(P.order(), p) or P.order() != n_pi(G.order(), {p}) or not _is_normal(P, G):
        raise NotNilpotent(f"p-parts of generators do not give a normal Sylow {p}-subgroup")
    return P


def nilpotency_witness(G):
    """The Sylow decomposition of ``G`` if ``G`` is nilpotent, else None."""
    parts = []
    product = 1
    for p in prime_divisors(G.order()):
        P = _sylow_candidate(G, p)
        if not is_p_power(P.order(), p) or not _is_normal(P, G):
            return None
        parts.append((p, P))
        product *= P.order()
    if product != G.order():
        return None
    return SylowDecomposition(G, tuple(parts))


def is_nilpotent(G):
    return nilpotency_witness(G) is not None


def sylow_decomposition(G):
    decomp = nilpotency_witness(G)
    if decomp is None:
        raise NotNilpotent("group is not nilpotent")
    return decomp


def hall_subgroup(G, pi, decomp=None):
    """Product of the Sylow parts of ``G`` for the primes in ``pi``."""
    if decomp is None:
        decomp = sylow_decomposition(G)
    gens = [x for p, P in decomp.parts if p in pi for x in P.generators]
    return PermGroup(G.degree, gens)


@dataclass(frozen=True)
class HallOrbitReport:
    pi: PrimeSet
    expected_size: int
    orbit_sizes: tuple
    kernel_order: int
    hall_order: int
    sizes_ok: bool
    kernel_ok: bool

    @property
    def ok(self):
        return self.sizes_ok and self.kernel_ok


def block_kernel(G, blocks, budgets: Budgets = DEFAULT_BUDGETS):
    """Elements of ``G`` fixing every block setwise (by filtering)."""
    sets = [frozenset(b) for b in blocks]
    return [g for g in G.elements(budgets)
            if all(frozenset(g[a] for a in s) == s for s in sets)]


def check_hall_orbits(G, H, budgets: Budgets = DEFAULT_BUDGETS):
    """Orbit sizes of a Hall subgroup of a transitive nilpotent group, and the
    kernel of the action on its orbits."""
    if not G.is_transitive():
        raise ValueError("check_hall_orbits needs a transitive group")
    if not is_nilpotent(G):
        raise NotNilpotent("check_hall_orbits needs a nilpotent group")
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    pi = prime_divisors(H.order())
    if H.order() != n_pi(G.order(), pi):
        raise ValueError("H is not a Hall subgroup of G")
    expected = n_pi(G.degree, pi)
    h_orbits = orbits(H)
    sizes = tuple(len(o) for o in h_orbits)
    kernel = frozenset(block_kernel(G, h_orbits, budgets))
    return HallOrbitReport(
        pi=pi,
        expected_size=expected,
        orbit_sizes=sizes,
        kernel_order=len(kernel),
        hall_order=H.order(),
        sizes_ok=all(s == expected for s in sizes),
        kernel_ok=kernel == H.element_set(budgets),
    )


@dataclass(frozen=True)
class TransitiveDecomposition:
    """A transitive nilpotent group split along a prime ``p``.

    ``rho[a] = (i, j)``: point ``a`` lies in the ``i``-th orbit of the Sylow
    p-subgroup P and the ``j``-th orbit of its Hall complement H. ``P_prime``
    is the action on Orb(H), ``H_prime`` the action on Orb(P). In the product
    action of ``P_prime x H_prime`` point ``a`` becomes ``j * len(Orb(P)) + i``
    (see ``encode``).
    """

    p: int
    P: PermGroup
    H: PermGroup
    p_orbits: tuple
    h_orbits: tuple
    rho: tuple
    P_prime: PermGroup
    H_prime: PermGroup

    def encode(self, point):
        i, j = self.rho[point]
        return j * len(self.p_orbits) + i

    def conjugate(self, g):
        """Image of ``g`` acting on the product-action encoding of the points."""
        images = [0] * len(self.rho)
        for a in range(len(self.rho)):
            images[self.encode(a)] = self.encode(g[a])
        return Permutation(images)

    def product_group(self):
        return direct_product_action(self.P_prime, self.H_prime)


def transitive_decompose(G, p, decomp=None):
    if not G.is_transitive():
        raise ValueError("transitive_decompose needs a transitive group")
    if G.order() % p:
        raise ValueError(f"{p} does not divide |G| = {G.order()}")
    if decomp is None:
        decomp = sylow_decomposition(G)
    P = decomp.part(p)
    H = hall_subgroup(G, PrimeSet(q for q in decomp.primes if q != p), decomp)
    p_orbits = tuple(orbits(P))
    h_orbits = tuple(orbits(H))
    for delta in p_orbits:
        for gamma in h_orbits:
            common = set(delta) & set(gamma)
            if len(common) != 1:
                raise DecompositionFailed(
                    f"P-orbit {delta.members} meets H-orbit {gamma.members} in {len(common)} points")
    p_index = {a: i for i, o in enumerate(p_orbits) for a in o}
    h_index = {a: j for j, o in enumerate(h_orbits) for a in o}
    rho = tuple((p_index[a], h_index[a]) for a in range(G.degree))
    P_prime, _ = induced_action(G, list(h_orbits))
    H_prime, _ = induced_action(G, list(p_orbits))
    return TransitiveDecomposition(p, P, H, p_orbits, h_orbits, rho, P_prime, H_prime)
