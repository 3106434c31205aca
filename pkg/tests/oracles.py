"""Brute-force reference computations on plain tuples.

Nothing here imports the package, so these stay independent of the code they check.
"""

from itertools import permutations, product


def mult(p, q):
    """Apply p, then q."""
    return tuple(q[a] for a in p)


def enumerate_group(gens, n):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mult(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def k_orbit_sets(elements, n, k):
    """Map each k-tuple to the frozenset of its images under the elements."""
    return {t: frozenset(tuple(g[a] for a in t) for g in elements)
            for t in product(range(n), repeat=k)}


def brute_closure(elements, n, k):
    orb = k_orbit_sets(elements, n, k)
    return {p for p in permutations(range(n))
            if all(tuple(p[a] for a in t) in orb[t] for t in orb)}


def is_nilpotent_by_center(elements):
    """Upper central series reaches the whole group."""
    elements = set(elements)
    n = len(next(iter(elements)))
    inv = {g: tuple(sorted(range(n), key=lambda a: g[a])) for g in elements}
    zeta = {tuple(range(n))}
    while True:
        # g is central modulo zeta when every commutator [g, h] lies in zeta
        nxt = {g for g in elements
               if all(mult(mult(mult(inv[g], inv[h]), g), h) in zeta for h in elements)}
        if nxt == zeta:
            return zeta == elements
        zeta = nxt


def orbit_partition(gens, n):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for g in gens:
        for a in range(n):
            x, y = find(a), find(g[a])
            if x != y:
                parent[max(x, y)] = min(x, y)
    blocks = {}
    for a in range(n):
        blocks.setdefault(find(a), []).append(a)
    return sorted(blocks.values())
