"""Named test groups. Tags are recomputed and checked when the catalog loads."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cycles import GroupSpec
from .structure import factorize, is_nilpotent

TAGS = frozenset({"nilpotent", "p-group", "abelian", "transitive", "regular", "non-nilpotent"})

_NA = {"nilpotent", "abelian"}
_NPA = {"nilpotent", "p-group", "abelian"}
_TR = {"transitive", "regular"}

# (name, degree, generators, tags)
_ENTRIES = [
    ("trivial-1", 1, [], _NA | _TR),
    ("trivial-4", 4, [], _NA),
    ("C2-regular", 2, ["(1 2)"], _NPA | _TR),
    ("C3-regular", 3, ["(1 2 3)"], _NPA | _TR),
    ("C4-regular", 4, ["(1 2 3 4)"], _NPA | _TR),
    ("C5-regular", 5, ["(1 2 3 4 5)"], _NPA | _TR),
    ("C6-regular", 6, ["(1 2 3 4 5 6)"], _NA | _TR),
    ("C8-regular", 8, ["(1 2 3 4 5 6 7 8)"], _NPA | _TR),
    ("C12-regular", 12, ["(1 2 3 4 5 6 7 8 9 10 11 12)"], _NA | _TR),
    ("E4-regular", 4, ["(1 2)(3 4)", "(1 3)(2 4)"], _NPA | _TR),
    ("C2^3", 6, ["(1 2)", "(3 4)", "(5 6)"], _NPA),
    ("V4-three-orbits", 6, ["(1 2)(3 4)", "(1 2)(5 6)"], _NPA),
    ("V4-three-orbits+C3", 9, ["(1 2)(3 4)", "(1 2)(5 6)", "(7 8 9)"], _NA),
    ("C3-diagonal", 6, ["(1 2 3)(4 5 6)"], _NPA),
    ("D4-natural", 4, ["(1 2 3 4)", "(1 3)"], {"nilpotent", "p-group", "transitive"}),
    ("Q8-regular", 8, ["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"],
     {"nilpotent", "p-group"} | _TR),
    ("C2wrC2-regular", 8, ["(1 2 3 4)(5 8 7 6)", "(1 5)(2 6)(3 7)(4 8)"],
     {"nilpotent", "p-group"} | _TR),
    ("C2xC3-product", 6, ["(1 4)(2 5)(3 6)", "(1 2 3)(4 5 6)"], _NA | _TR),
    ("C4xC3-product", 12, ["(1 4 7 10)(2 5 8 11)(3 6 9 12)", "(1 2 3)(4 5 6)(7 8 9)(10 11 12)"],
     _NA | _TR),
    ("C4+C3-sum", 7, ["(1 2 3 4)", "(5 6 7)"], _NA),
    ("Q8+C3-sum", 11, ["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)", "(9 10 11)"], {"nilpotent"}),
    ("S3-natural", 3, ["(1 2)", "(1 2 3)"], {"non-nilpotent", "transitive"}),
    ("D5-natural", 5, ["(1 2 3 4 5)", "(2 5)(3 4)"], {"non-nilpotent", "transitive"}),
]


@dataclass(frozen=True)
class CatalogEntry:
    spec: GroupSpec
    tags: frozenset

    @property
    def name(self):
        return self.spec.name

    def group(self):
        return _group(self.spec)


@lru_cache(maxsize=None)
def _group(spec):
    return spec.group()


def compute_tags(G):
    tags = set()
    order = G.order()
    nilpotent = is_nilpotent(G)
    tags.add("nilpotent" if nilpotent else "non-nilpotent")
    if len(factorize(order)) == 1:
        tags.add("p-group")
    gens = G.generators
    if all(a * b == b * a for a in gens for b in gens):
        tags.add("abelian")
    if G.is_transitive():
        tags.add("transitive")
        if order == G.degree:
            tags.add("regular")
    return frozenset(tags)


@lru_cache(maxsize=1)
def catalog():
    """All entries, with declared tags checked against computed ones."""
    out = []
    for name, degree, gens, tags in _ENTRIES:
        entry = CatalogEntry(GroupSpec(name, degree, tuple(gens)), frozenset(tags))
        computed = compute_tags(entry.group())
        if computed != entry.tags:
            raise AssertionError(
                f"catalog entry {name}: declared tags {sorted(entry.tags)} "
                f"but computed {sorted(computed)}")
        out.append(entry)
    return tuple(out)


def get(name):
    for entry in catalog():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")
