"""k-closures of permutation groups.

Three routes compute the same group:

* ``closure_oracle`` filters all ``n!`` permutations against the k-orbit table;
* ``closure_backtrack`` assigns images point by point and prunes a partial
  map as soon as some tuple of assigned points leaves its k-orbit;
* ``closure_nilpotent`` splits a nilpotent group into its Sylow subgroups,
  closes each one, and multiplies the results (valid for ``k >= 2``).

The ``check_*`` functions test the structural identities behind the Sylow
route on concrete groups, always against an enumerated element set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ._backend import kernels
from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import (BudgetExceeded, InternalContradiction, KLessThanTwo,
                     NotNilpotent)
from .korbit import k_orbits, preserves_partition, tuple_digits
from .perm import (PermGroup, Permutation, direct_product_action, direct_sum,
                   direct_sum_element, orbits, restrict_perm,
                   subgroup_from_elements)
from .structure import (is_nilpotent, nilpotency_witness, sylow_decomposition,
                        sylow_subgroup)

logger = logging.getLogger(__name__)

METHODS = ("oracle", "backtrack", "nilpotent", "k1", "auto")


@dataclass(frozen=True)
class ClosureResult:
    group: PermGroup
    method: str
    element_count: int
    certificate: tuple | None = None

    def element_set(self, budgets: Budgets = DEFAULT_BUDGETS):
        if self.certificate is not None:
            return frozenset(self.certificate)
        return self.group.element_set(budgets)


def _point_classes(G):
    cls = np.empty(G.degree, dtype=np.int32)
    for i, orbit in enumerate(orbits(G)):
        for a in orbit:
            cls[a] = i
    return cls


def _level_checks(n, k):
    """Tuples grouped by their largest entry, ascending codes within a group."""
    digits = tuple_digits(n, k)
    top = digits.max(axis=1)
    order = np.argsort(top, kind="stable")
    starts = np.searchsorted(top[order], np.arange(n + 1)).astype(np.int64)
    return starts, order.astype(np.int64), np.ascontiguousarray(digits[order])


def _as_result(G, rows, method):
    elements = tuple(Permutation._trusted(tuple(int(a) for a in row)) for row in rows)
    group = subgroup_from_elements(G.degree, elements)
    if group.order() != len(elements):
        raise InternalContradiction(
            f"{method}: {len(elements)} permutations found but they generate "
            f"a group of order {group.order()}")
    return ClosureResult(group, method, len(elements), elements)


def closure_oracle(G, k, budgets: Budgets = DEFAULT_BUDGETS):
    """All permutations preserving every k-orbit, by exhaustive filtering."""
    if G.degree > budgets.max_oracle_degree:
        raise BudgetExceeded(
            f"degree {G.degree} exceeds oracle guard {budgets.max_oracle_degree}")
    part = k_orbits(G, k, budgets)
    rows = kernels.oracle_filter(part.orbit_of, G.degree, k)
    return _as_result(G, rows, "oracle")


def closure_backtrack(G, k, budgets: Budgets = DEFAULT_BUDGETS):
    if G.degree > budgets.max_backtrack_degree:
        raise BudgetExceeded(
            f"degree {G.degree} exceeds backtrack guard {budgets.max_backtrack_degree}")
    part = k_orbits(G, k, budgets)
    starts, codes, digits = _level_checks(G.degree, k)
    rows = kernels.backtrack(part.orbit_of, G.degree, k, _point_classes(G),
                             starts, codes, digits)
    budgets.check_elements(len(rows))
    return _as_result(G, rows, "backtrack")


def closure_k1(G):
    """The product of the symmetric groups on the orbits of ``G``."""
    gens = []
    for orbit in orbits(G):
        gens.extend(PermGroup.symmetric(orbit.members, G.degree).generators)
    group = PermGroup(G.degree, gens)
    return ClosureResult(group, "k1", group.order(), None)


def closure_nilpotent(G, k, budgets: Budgets = DEFAULT_BUDGETS):
    """k-closure of a nilpotent group as the product of its Sylow closures."""
    if k < 2:
        raise KLessThanTwo(
            "the Sylow product formula needs k >= 2; for k = 1 a transitive "
            "group closes to the full symmetric group, which the product of "
            "Sylow 1-closures need not reach")
    decomp = nilpotency_witness(G)
    if decomp is None:
        raise NotNilpotent("closure_nilpotent needs a nilpotent group")
    gens = []
    expected = 1
    for p, P in decomp.parts:
        part_closure = closure_backtrack(P, k, budgets)
        gens.extend(part_closure.group.generators)
        expected *= part_closure.element_count
    group = PermGroup(G.degree, gens)
    if group.order() != expected:
        raise InternalContradiction(
            f"Sylow closures generate order {group.order()}, expected direct product order {expected}")
    part = k_orbits(G, k, budgets)
    if not all(preserves_partition(g, part) for g in group.generators):
        raise InternalContradiction("product of Sylow closures moves a k-orbit of G")
    if not G.is_subgroup_of(group):
        raise InternalContradiction("product of Sylow closures does not contain G")
    return ClosureResult(group, "nilpotent", expected, None)


def closure(G, k, method="auto", budgets: Budgets = DEFAULT_BUDGETS):
    """Dispatch to one closure route. ``auto`` prefers the Sylow route when it applies."""
    if method == "auto":
        if k == 1:
            method = "k1"
        elif is_nilpotent(G):
            method = "nilpotent"
        else:
            method = "backtrack"
    if method == "k1":
        if k != 1:
            raise ValueError("method k1 computes 1-closures only")
        return closure_k1(G)
    if method == "oracle":
        return closure_oracle(G, k, budgets)
    if method == "backtrack":
        return closure_backtrack(G, k, budgets)
    if method == "nilpotent":
        return closure_nilpotent(G, k, budgets)
    raise ValueError(f"unknown closure method {method!r}; expected one of {METHODS}")


def is_k_closed(G, k, method="auto", budgets: Budgets = DEFAULT_BUDGETS):
    return closure(G, k, method, budgets).element_count == G.order()


@dataclass
class LemmaReport:
    lemma: str
    ok: bool
    order_lhs: int
    order_rhs: int
    details: dict = field(default_factory=dict)


def check_dirsum_lemma(G1, G2, k, method="backtrack", budgets: Budgets = DEFAULT_BUDGETS):
    """Closure of the disjoint-union action against the sum of the closures."""
    lhs = closure(direct_sum(G1, G2), k, method, budgets).element_set(budgets)
    c1 = closure(G1, k, method, budgets).element_set(budgets)
    c2 = closure(G2, k, method, budgets).element_set(budgets)
    rhs = frozenset(direct_sum_element(a, b) for a, b in product(sorted(c1), sorted(c2)))
    return LemmaReport("dirsum", lhs == rhs, len(lhs), len(rhs))


def _preserves_blocks(g, blocks):
    sets = {frozenset(b) for b in blocks}
    return all(frozenset(g[a] for a in b) in sets for b in sets)


def check_dirprod_lemma(G1, G2, k, method="backtrack", budgets: Budgets = DEFAULT_BUDGETS):
    """Closure of the product action against the product of the closures.

    For ``k >= 2`` also checks that every closure element permutes the rows
    ``{a} x range(n2)`` and the columns ``range(n1) x {b}`` among themselves.
    """
    G, enc = direct_product_action(G1, G2)
    lhs = closure(G, k, method, budgets).element_set(budgets)
    c1 = closure(G1, k, method, budgets).element_set(budgets)
    c2 = closure(G2, k, method, budgets).element_set(budgets)
    rhs = frozenset(enc.element(a, b) for a, b in product(sorted(c1), sorted(c2)))
    grid_ok = None
    if k >= 2:
        rows, cols = enc.rows(), enc.columns()
        grid_ok = all(_preserves_blocks(g, rows) and _preserves_blocks(g, cols) for g in lhs)
    ok = lhs == rhs and grid_ok is not False
    return LemmaReport("dirprod", ok, len(lhs), len(rhs), {"grid_ok": grid_ok})


def check_setwise_stab_lemma(G, p, delta_indices, budgets: Budgets = DEFAULT_BUDGETS):
    """Elements of G fixing chosen Sylow p-orbits setwise act on their union as P does."""
    decomp = sylow_decomposition(G)
    P = decomp.part(p)
    p_orbits = orbits(P)
    deltas = [frozenset(p_orbits[i]) for i in delta_indices]
    union = sorted(set().union(*deltas))
    stab = [g for g in G.elements(budgets)
            if all(frozenset(g[a] for a in d) == d for d in deltas)]
    restricted = {restrict_perm(g, union) for g in stab}
    p_restricted = {restrict_perm(x, union) for x in P.elements(budgets)}
    return LemmaReport("setwise-stab", restricted <= p_restricted,
                       len(restricted), len(p_restricted),
                       {"p": p, "orbits": [sorted(d) for d in deltas]})


def check_sylow_orbit_lemmas(G, k, p, method="backtrack", budgets: Budgets = DEFAULT_BUDGETS):
    """Sylow p-subgroup Q of the k-closure against the k-closure of P.

    Checks ``P^(k) <= Q``, equal point orbits of P and Q, and ``P^(k) = Q``.
    """
    if k < 2:
        raise KLessThanTwo("Sylow lemmas concern k >= 2")
    P = sylow_subgroup(G, p)
    Gk = closure(G, k, method, budgets).group
    Q = sylow_subgroup(Gk, p)
    Pk = closure(P, k, method, budgets).element_set(budgets)
    Q_elems = Q.element_set(budgets)
    orbits_equal = orbits(P) == orbits(Q)
    contained = Pk <= Q_elems
    equal = Pk == Q_elems
    return LemmaReport("sylow-lemmas", orbits_equal and contained and equal,
                       len(Pk), len(Q_elems),
                       {"p": p, "orbits_equal": orbits_equal,
                        "contained": contained, "equal": equal})
