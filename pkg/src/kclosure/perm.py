"""Permutations and permutation groups.

Points are ``0..n-1``. Actions are written on the right: ``a ^ (p * q)`` is
``(a ^ p) ^ q``, so ``p * q`` applies ``p`` first. With a permutation ``p``,
``p[a]`` is the image of the point ``a``.

Groups carry a stabilizer chain built lazily by deterministic Schreier-Sims.
A new base point is always the smallest point moved by the generator that
forces it, so chains and all derived output are reproducible.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product
from math import gcd

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import BlockSystemError, DegreeMismatch


class Permutation:
    """An immutable bijection on ``{0, ..., degree-1}``."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images):
        images = tuple(int(a) for a in images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation degree must be positive")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {images}")
        self._images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images):
        p = cls.__new__(cls)
        p._images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 0-based cycles; points outside every cycle are fixed."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a in cycle:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycles")
                seen.add(a)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return cls._trusted(tuple(images))

    @property
    def degree(self):
        return len(self._images)

    @property
    def images(self):
        return self._images

    def __getitem__(self, point):
        return self._images[point]

    def __len__(self):
        return len(self._images)

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other._images) != len(self._images):
            raise DegreeMismatch(
                f"cannot compose degrees {self.degree} and {other.degree}")
        q = other._images
        return Permutation._trusted(tuple([q[a] for a in self._images]))

    def inverse(self):
        inv = [0] * len(self._images)
        for a, b in enumerate(self._images):
            inv[b] = a
        return Permutation._trusted(tuple(inv))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self):
        return all(a == b for a, b in enumerate(self._images))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        seen = [False] * len(self._images)
        out = []
        for a in range(len(self._images)):
            if seen[a]:
                continue
            cycle = [a]
            seen[a] = True
            b = self._images[a]
            while b != a:
                seen[b] = True
                cycle.append(b)
                b = self._images[b]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self):
        result = 1
        for cycle in self.cycles():
            result = result * len(cycle) // gcd(result, len(cycle))
        return result

    def moved_points(self):
        return [a for a, b in enumerate(self._images) if a != b]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({body or '()'}, degree={self.degree})"


def compose(p, q):
    """The permutation applying ``p`` first, then ``q``."""
    return p * q


def inverse(p):
    return p.inverse()


def identity(degree):
    return Permutation.identity(degree)


@dataclass(frozen=True)
class PointSet:
    """A subset of the points of a degree-``degree`` domain, stored sorted."""

    degree: int
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if any(not 0 <= a < self.degree for a in members):
            raise ValueError(f"points {members} not within 0..{self.degree - 1}")
        object.__setattr__(self, "members", members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, point):
        return point in self.members

    def image(self, g):
        return PointSet(self.degree, tuple(g[a] for a in self.members))


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.transversal = {}

    def rebuild_orbit(self, degree):
        trans = {self.point: Permutation.identity(degree)}
        queue = [self.point]
        for a in queue:
            u = trans[a]
            for s in self.gens:
                b = s[a]
                if b not in trans:
                    trans[b] = u * s
                    queue.append(b)
        self.transversal = trans


class _StabilizerChain:
    """Base and strong generating set, built by deterministic Schreier-Sims."""

    def __init__(self, degree, generators):
        self.degree = degree
        self.levels = []
        gens = [g for g in generators if not g.is_identity()]
        for g in gens:
            if all(g[lv.point] == lv.point for lv in self.levels):
                self.levels.append(_Level(g.moved_points()[0]))
        for i, lv in enumerate(self.levels):
            base = [l.point for l in self.levels[:i]]
            lv.gens = [g for g in gens if all(g[b] == b for b in base)]
            lv.rebuild_orbit(degree)
        self._complete()

    def strip(self, g, start=0):
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            u = lv.transversal.get(g[lv.point])
            if u is None:
                return g, i
            g = g * u.inverse()
        return g, len(self.levels)

    def _complete(self):
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            found = None
            for a, u in lv.transversal.items():
                for s in lv.gens:
                    y = u * s * lv.transversal[s[a]].inverse()
                    h, j = self.strip(y, i + 1)
                    if j < len(self.levels) or not h.is_identity():
                        found = (h, j)
                        break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            if j == len(self.levels):
                self.levels.append(_Level(h.moved_points()[0]))
            for l in range(i + 1, j + 1):
                self.levels[l].gens.append(h)
                self.levels[l].rebuild_orbit(self.degree)
            i = j

    def order(self):
        result = 1
        for lv in self.levels:
            result *= len(lv.transversal)
        return result

    def contains(self, g):
        h, j = self.strip(g)
        return j == len(self.levels) and h.is_identity()

    def elements(self):
        # every element factors uniquely as u_last * ... * u_1 * u_0
        transversals = [list(lv.transversal.values()) for lv in reversed(self.levels)]
        ident = Permutation.identity(self.degree)
        out = []
        for combo in product(*transversals):
            g = ident
            for u in combo:
                g = g * u
            out.append(g)
        return out


class PermGroup:
    """A permutation group of a fixed degree given by generators.

    Immutable; the stabilizer chain is built once, on first use, under a lock.
    """

    def __init__(self, degree, generators=()):
        if degree < 1:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise DegreeMismatch(
                    f"generator of degree {g.degree} in group of degree {degree}")
            gens.append(g)
        self._degree = degree
        self._generators = tuple(gens)
        self._chain = None
        self._lock = threading.Lock()

    @classmethod
    def trivial(cls, degree):
        return cls(degree, ())

    @classmethod
    def symmetric(cls, points, degree):
        """Sym(points) acting on a degree-``degree`` domain, fixing the rest."""
        points = sorted(points)
        if len(points) < 2:
            return cls(degree, ())
        gens = [Permutation.from_cycles(degree, [points[:2]])]
        if len(points) > 2:
            gens.append(Permutation.from_cycles(degree, [points]))
        return cls(degree, gens)

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        return self._generators

    @property
    def chain(self):
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _StabilizerChain(self._degree, self._generators)
        return self._chain

    def base(self):
        return [lv.point for lv in self.chain.levels]

    def order(self):
        return self.chain.order()

    def contains(self, x):
        if x.degree != self._degree:
            raise DegreeMismatch(
                f"permutation of degree {x.degree} vs group degree {self._degree}")
        return self.chain.contains(x)

    __contains__ = contains

    def elements(self, budgets: Budgets = DEFAULT_BUDGETS):
        """All elements, sorted by image tuple."""
        budgets.check_elements(self.order())
        return sorted(self.chain.elements())

    def element_set(self, budgets: Budgets = DEFAULT_BUDGETS):
        return frozenset(self.elements(budgets))

    def orbits(self):
        return orbits(self)

    def is_transitive(self):
        return len(orbits(self)) == 1

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self._generators)

    def same_group(self, other):
        return (self._degree == other._degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def __repr__(self):
        return f"PermGroup(degree={self._degree}, generators={list(self._generators)})"


def order(G):
    return G.order()


def contains(G, x):
    return G.contains(x)


def orbits(G):
    """Orbits of ``G`` on points, each sorted, listed by least member."""
    n = G.degree
    seen = [False] * n
    out = []
    for a in range(n):
        if seen[a]:
            continue
        seen[a] = True
        orbit = [a]
        for b in orbit:
            for g in G.generators:
                c = g[b]
                if not seen[c]:
                    seen[c] = True
                    orbit.append(c)
        out.append(PointSet(n, tuple(orbit)))
    return out


def subgroup_from_elements(degree, elements):
    """Group generated greedily from ``elements``, given in a fixed order.

    An element is kept only if it is not already in the group generated so far,
    which yields a short generating set deterministic in the input order.
    """
    gens = []
    current = PermGroup(degree, ())
    for g in elements:
        if not current.contains(g):
            gens.append(g)
            current = PermGroup(degree, gens)
    return current


def induced_action(G, blocks):
    """Action of ``G`` on a list of blocks, relabeled ``0..len(blocks)-1``.

    Returns the induced group and a dict mapping each generator of ``G`` to
    the induced generator.
    """
    where = {}
    for i, block in enumerate(blocks):
        for a in block:
            if a in where:
                raise BlockSystemError(f"point {a} lies in two blocks")
            where[a] = i
    m = len(blocks)
    if m == 0:
        raise BlockSystemError("empty block list")
    mapping = {}
    for g in G.generators:
        images = []
        for block in blocks:
            first = g[block.members[0]]
            j = where.get(first)
            if j is None or blocks[j].members != tuple(sorted(g[a] for a in block)):
                raise BlockSystemError(
                    f"{g} does not map block {block.members} onto a listed block")
            images.append(j)
        mapping[g] = Permutation._trusted(tuple(images))
    return PermGroup(m, list(mapping.values())), mapping


def restriction(G, delta):
    """The constituent of ``G`` on an invariant set, with delta's sorted points relabeled 0.."""
    singles = [PointSet(G.degree, (a,)) for a in sorted(delta)]
    group, _ = induced_action(G, singles)
    return group


def restrict_perm(g, delta):
    points = sorted(delta)
    index = {a: i for i, a in enumerate(points)}
    return Permutation(index[g[a]] for a in points)


def setwise_stabilizer(G, delta, budgets: Budgets = DEFAULT_BUDGETS):
    members = set(delta)
    kept = [g for g in G.elements(budgets) if {g[a] for a in members} == members]
    return subgroup_from_elements(G.degree, kept)


def _shift_sum(g, h):
    n1 = g.degree
    return Permutation._trusted(g.images + tuple(n1 + b for b in h.images))


def direct_sum(G1, G2):
    """G1 x G2 on the disjoint union: G1 on ``0..n1-1``, G2 shifted to ``n1..``."""
    id1 = Permutation.identity(G1.degree)
    id2 = Permutation.identity(G2.degree)
    gens = [_shift_sum(g, id2) for g in G1.generators]
    gens += [_shift_sum(id1, h) for h in G2.generators]
    return PermGroup(G1.degree + G2.degree, gens)


def direct_sum_element(g, h):
    return _shift_sum(g, h)


@dataclass(frozen=True)
class ProductEncoding:
    """Pair ``(a, b)`` of ``range(n1) x range(n2)`` stored as point ``a*n2 + b``."""

    n1: int
    n2: int

    def encode(self, a, b):
        return a * self.n2 + b

    def decode(self, point):
        return divmod(point, self.n2)

    def element(self, g, h):
        """The permutation ``(g, h)`` in the product action."""
        n2 = self.n2
        return Permutation._trusted(tuple(
            g[a] * n2 + h[b] for a in range(self.n1) for b in range(n2)))

    def rows(self):
        """Blocks ``{a} x range(n2)``."""
        return [PointSet(self.n1 * self.n2, tuple(self.encode(a, b) for b in range(self.n2)))
                for a in range(self.n1)]

    def columns(self):
        """Blocks ``range(n1) x {b}``."""
        return [PointSet(self.n1 * self.n2, tuple(self.encode(a, b) for a in range(self.n1)))
                for b in range(self.n2)]


def direct_product_action(G1, G2):
    enc = ProductEncoding(G1.degree, G2.degree)
    id1 = Permutation.identity(G1.degree)
    id2 = Permutation.identity(G2.degree)
    gens = [enc.element(g, id2) for g in G1.generators]
    gens += [enc.element(id1, h) for h in G2.generators]
    return PermGroup(G1.degree * G2.degree, gens), enc
