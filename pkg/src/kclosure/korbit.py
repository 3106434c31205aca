"""Orbits of a permutation group on k-tuples of points.

A k-tuple ``(a_0, ..., a_{k-1})`` over ``range(n)`` is coded as the
mixed-radix integer ``sum(a_i * n**(k-1-i))``. Numeric order of codes is
lexicographic order of tuples, and orbit ids are assigned in order of each
orbit's least tuple. Both conventions appear in partition dumps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._backend import kernels
from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import DegreeMismatch


def tuple_digits(n, k):
    """Array of shape ``(n**k, k)``; row ``t`` is the tuple with code ``t``."""
    codes = np.arange(n**k, dtype=np.int64)
    digits = np.empty((n**k, k), dtype=np.int64)
    for j in range(k - 1, -1, -1):
        digits[:, j] = codes % n
        codes //= n
    return digits


def radix_weights(n, k):
    return n ** np.arange(k - 1, -1, -1, dtype=np.int64)


def tuple_image_table(perms, n, k):
    """Codes of ``t^g`` for each permutation ``g`` (rows) and tuple code ``t`` (columns)."""
    imgs = np.asarray([p.images if hasattr(p, "images") else p for p in perms],
                      dtype=np.int64).reshape(-1, n)
    return imgs[:, tuple_digits(n, k)] @ radix_weights(n, k)


@dataclass(frozen=True, eq=False)
class TupleOrbitPartition:
    """The partition of ``range(n)**k`` into orbits of a group."""

    degree: int
    arity: int
    orbit_of: np.ndarray
    representatives: tuple
    count: int

    def encode(self, t):
        code = 0
        for a in t:
            code = code * self.degree + a
        return code

    def decode(self, code):
        out = []
        for _ in range(self.arity):
            code, a = divmod(code, self.degree)
            out.append(a)
        return tuple(reversed(out))

    def orbit_id(self, t):
        return int(self.orbit_of[self.encode(t)])

    def orbit_sizes(self):
        return np.bincount(self.orbit_of, minlength=self.count)

    def members(self, orbit):
        return [self.decode(int(c)) for c in np.flatnonzero(self.orbit_of == orbit)]

    def __eq__(self, other):
        if not isinstance(other, TupleOrbitPartition):
            return NotImplemented
        return (self.degree == other.degree and self.arity == other.arity
                and np.array_equal(self.orbit_of, other.orbit_of))

    __hash__ = None

    def dump(self):
        """One line per orbit: ``id: size: representative`` in 1-based points."""
        sizes = self.orbit_sizes()
        lines = []
        for i, rep in enumerate(self.representatives):
            tup = "(" + ",".join(str(a + 1) for a in rep) + ")"
            lines.append(f"{i}: {sizes[i]}: {tup}")
        return "\n".join(lines)


def k_orbits(G, k, budgets: Budgets = DEFAULT_BUDGETS):
    n = G.degree
    budgets.check_tuples(n, k)
    size = n**k
    gens = [g for g in G.generators if not g.is_identity()]
    if gens:
        tables = tuple_image_table(gens, n, k)
    else:
        tables = np.zeros((0, size), dtype=np.int64)
    ids, count = kernels.orbit_ids(tables, size)
    ids = np.asarray(ids, dtype=np.int32)
    ids.setflags(write=False)
    _, first = np.unique(ids, return_index=True)
    digits = tuple_digits(n, k)
    reps = tuple(tuple(int(a) for a in digits[c]) for c in first)
    return TupleOrbitPartition(n, k, ids, reps, int(count))


def preserves_partition(x, part):
    """Whether ``x`` maps every tuple into its own orbit."""
    if x.degree != part.degree:
        raise DegreeMismatch(f"permutation degree {x.degree} vs partition degree {part.degree}")
    return kernels.preserves(np.asarray(x.images, dtype=np.int32), part.orbit_of,
                             part.degree, part.arity)


@lru_cache(maxsize=32)
def _reachable_images(G, k, budgets):
    elements = G.elements(budgets)
    budgets.check_elements(len(elements) * G.degree**k)
    return tuple_image_table(elements, G.degree, k)


def wielandt_member(G, k, x, budgets: Budgets = DEFAULT_BUDGETS):
    """Membership in the k-closure by the pointwise witness criterion.

    For every tuple ``t`` some element ``g`` of ``G`` must agree with ``x`` on
    all entries of ``t``. Witnesses are searched over the enumerated elements
    of ``G``; the tuple-orbit partition is not consulted.
    """
    if x.degree != G.degree:
        raise DegreeMismatch(f"permutation degree {x.degree} vs group degree {G.degree}")
    budgets.check_tuples(G.degree, k)
    images = _reachable_images(G, k, budgets)
    target = tuple_image_table([x], G.degree, k)[0]
    return bool((images == target).any(axis=0).all())
