"""Verification suites run over the catalog.

Each suite yields ``CheckRecord`` rows. A row is ``pass``, ``fail`` or
``skip``; skips mark budget limits or unmet hypotheses and never count as
failures.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from itertools import chain, combinations

from .budgets import DEFAULT_BUDGETS, Budgets
from .catalog import catalog, get
from .engine import (check_dirprod_lemma, check_dirsum_lemma,
                      check_setwise_stab_lemma, check_sylow_orbit_lemmas,
                      closure_backtrack, closure_k1, closure_nilpotent,
                      closure_oracle)
from .errors import BudgetExceeded
from .korbit import k_orbits, preserves_partition, wielandt_member
from .perm import Permutation, orbits
from .structure import (check_hall_orbits, hall_subgroup, is_nilpotent,
                        nilpotency_witness, prime_divisors, PrimeSet)

SUITES = ("main-theorem", "corollary", "dirsum", "dirprod", "cp1",
          "setwise-stab", "sylow-lemmas", "chain", "korbit-equivalence")

LEMMA_PAIR_BASE = ("C2-regular", "C3-regular", "C4-regular", "E4-regular", "trivial-1")


@dataclass
class CheckRecord:
    group: str
    suite: str
    k: int | None
    method: str
    order_lhs: int | None
    order_rhs: int | None
    status: str
    millis: float
    note: str = ""

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = round((time.perf_counter() - self.start) * 1000, 1)


def _status(ok):
    return "pass" if ok else "fail"


def _guarded(suite, group, k, method, fn):
    """Run ``fn() -> (lhs, rhs, ok, note)``; budget overruns become skips."""
    with _Timer() as t:
        try:
            lhs, rhs, ok, note = fn()
            status = _status(ok)
        except BudgetExceeded as exc:
            lhs = rhs = None
            status, note = "skip", f"budget: {exc}"
    return CheckRecord(group, suite, k, method, lhs, rhs, status, t.millis, note)


def _ks(k, default):
    return [k] if k is not None else list(default)


def _nilpotent_entries():
    return [e for e in catalog() if "nilpotent" in e.tags]


def suite_main_theorem(k=None, budgets=DEFAULT_BUDGETS):
    for entry in catalog():
        for kk in _ks(k, (2, 3)):
            if "nilpotent" not in entry.tags:
                yield CheckRecord(entry.name, "main-theorem", kk, "nilpotent", None, None,
                                  "skip", 0.0, "NotNilpotent")
                continue
            G = entry.group()

            def run(G=G, kk=kk):
                nil = closure_nilpotent(G, kk, budgets)
                bt = closure_backtrack(G, kk, budgets)
                sets = [nil.element_set(budgets), bt.element_set(budgets)]
                methods = "nilpotent=backtrack"
                if G.degree <= budgets.max_oracle_degree:
                    sets.append(closure_oracle(G, kk, budgets).element_set(budgets))
                    methods += "=oracle"
                rhs = 1
                for _, P in nilpotency_witness(G).parts:
                    rhs *= closure_backtrack(P, kk, budgets).element_count
                same = all(s == sets[0] for s in sets)
                closed_nilpotent = is_nilpotent(bt.group)
                ok = same and len(sets[0]) == rhs and closed_nilpotent
                note = f"{methods}; closure nilpotent={closed_nilpotent}"
                return len(sets[0]), rhs, ok, note

            yield _guarded("main-theorem", entry.name, kk, "all", run)


def suite_corollary(k=None, budgets=DEFAULT_BUDGETS):
    for entry in _nilpotent_entries():
        G = entry.group()
        for kk in _ks(k, (2, 3)):
            def run(G=G, kk=kk):
                own = closure_backtrack(G, kk, budgets).element_count
                g_closed = own == G.order()
                parts_closed = all(
                    closure_backtrack(P, kk, budgets).element_count == P.order()
                    for _, P in nilpotency_witness(G).parts)
                note = f"G closed={g_closed}; all Sylow closed={parts_closed}"
                return own, G.order(), g_closed == parts_closed, note

            yield _guarded("corollary", entry.name, kk, "backtrack", run)


def _lemma_pairs(max_degree, combine):
    names = LEMMA_PAIR_BASE
    for a in names:
        for b in names:
            G1, G2 = get(a).group(), get(b).group()
            if combine(G1.degree, G2.degree) <= max_degree:
                yield a, b, G1, G2


def suite_dirsum(k=None, budgets=DEFAULT_BUDGETS):
    for a, b, G1, G2 in _lemma_pairs(budgets.max_oracle_degree, lambda x, y: x + y):
        for kk in _ks(k, (2, 3)):
            def run(G1=G1, G2=G2, kk=kk):
                r = check_dirsum_lemma(G1, G2, kk, "oracle", budgets)
                return r.order_lhs, r.order_rhs, r.ok, ""

            yield _guarded("dirsum", f"{a}+{b}", kk, "oracle", run)


def suite_dirprod(k=None, budgets=DEFAULT_BUDGETS):
    for a, b, G1, G2 in _lemma_pairs(budgets.max_oracle_degree, lambda x, y: x * y):
        for kk in _ks(k, (2, 3)):
            def run(G1=G1, G2=G2, kk=kk):
                r = check_dirprod_lemma(G1, G2, kk, "oracle", budgets)
                return r.order_lhs, r.order_rhs, r.ok, f"grid_ok={r.details['grid_ok']}"

            yield _guarded("dirprod", f"{a}x{b}", kk, "oracle", run)


def _subsets(items, max_size=None):
    items = list(items)
    top = len(items) if max_size is None else min(max_size, len(items))
    return chain.from_iterable(combinations(items, r) for r in range(top + 1))


def suite_cp1(k=None, budgets=DEFAULT_BUDGETS):
    for entry in _nilpotent_entries():
        if "transitive" not in entry.tags:
            continue
        G = entry.group()
        decomp = nilpotency_witness(G)
        for pi in _subsets(decomp.primes):
            pi = PrimeSet(pi)

            def run(G=G, pi=pi):
                H = hall_subgroup(G, pi, decomp)
                r = check_hall_orbits(G, H, budgets)
                note = (f"pi={sorted(pi)}; orbit sizes={sorted(set(r.orbit_sizes))}; "
                        f"n_pi={r.expected_size}; kernel={r.kernel_order}")
                return r.kernel_order, r.hall_order, r.ok, note

            yield _guarded("cp1", entry.name, None, "enumeration", run)


def suite_setwise_stab(k=None, budgets=DEFAULT_BUDGETS):
    for entry in _nilpotent_entries():
        G = entry.group()
        decomp = nilpotency_witness(G)
        for p, P in decomp.parts:
            count = len(orbits(P))
            # all unions of P-orbits when few, else unions of at most three
            chosen = [s for s in _subsets(range(count), None if count <= 8 else 3) if s]

            def run(G=G, p=p, chosen=chosen):
                bad = []
                for idx in chosen:
                    r = check_setwise_stab_lemma(G, p, idx, budgets)
                    if not r.ok:
                        bad.append(idx)
                note = f"p={p}; {len(chosen)} orbit selections"
                if bad:
                    note += f"; violated for {bad[:3]}"
                return len(chosen) - len(bad), len(chosen), not bad, note

            yield _guarded("setwise-stab", entry.name, None, "enumeration", run)


def suite_sylow_lemmas(k=None, budgets=DEFAULT_BUDGETS):
    for entry in _nilpotent_entries():
        G = entry.group()
        for p in prime_divisors(G.order()):
            for kk in _ks(k, (2, 3)):
                def run(G=G, p=p, kk=kk):
                    r = check_sylow_orbit_lemmas(G, kk, p, "backtrack", budgets)
                    d = r.details
                    note = (f"p={p}; orbits equal={d['orbits_equal']}; "
                            f"P^(k)<=Q={d['contained']}; P^(k)=Q={d['equal']}")
                    return r.order_lhs, r.order_rhs, r.ok, note

                yield _guarded("sylow-lemmas", entry.name, kk, "backtrack", run)


def suite_chain(k=None, budgets=DEFAULT_BUDGETS):
    top = 3 if k is None else k
    for entry in catalog():
        G = entry.group()

        def run(G=G):
            closures = {kk: closure_backtrack(G, kk, budgets) for kk in range(top, 1, -1)}
            one = closure_k1(G).group
            failures = []
            upper = closures.get(top)
            if upper is not None and not G.element_set(budgets) <= upper.element_set():
                failures.append(f"G not in G^({top})")
            for kk in range(top, 2, -1):
                outer = closures[kk - 1].group
                if not all(outer.contains(g) for g in closures[kk].certificate):
                    failures.append(f"G^({kk}) not in G^({kk - 1})")
            lowest = closures[2].certificate if 2 in closures else G.elements(budgets)
            if not all(one.contains(g) for g in lowest):
                failures.append("G^(2) not in G^(1)")
            for kk, c in closures.items():
                again = closure_backtrack(c.group, kk, budgets)
                if again.element_set() != c.element_set():
                    failures.append(f"G^({kk}) not idempotent")
                if k_orbits(c.group, kk, budgets) != k_orbits(G, kk, budgets):
                    failures.append(f"Orb_{kk} not a fixpoint")
            chain_orders = "<=".join(str(closures[kk].element_count) for kk in sorted(closures, reverse=True))
            note = f"|G|={G.order()} <= {chain_orders} <= |G^(1)|={one.order()}"
            if failures:
                note += "; " + ", ".join(failures)
            return G.order(), one.order(), not failures, note

        yield _guarded("chain", entry.name, top, "backtrack", run)


def _random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def suite_korbit_equivalence(k=None, budgets=DEFAULT_BUDGETS, samples=200):
    for entry in catalog():
        G = entry.group()
        for kk in _ks(k, (1, 2, 3)):
            def run(G=G, kk=kk, name=entry.name):
                rng = random.Random(f"{name}/{kk}")
                probes = [_random_perm(rng, G.degree) for _ in range(samples)]
                # members of the closure make sure both answers get exercised
                if kk == 1:
                    probes += list(closure_k1(G).group.generators)
                elif G.degree <= budgets.max_backtrack_degree:
                    probes += list(closure_backtrack(G, kk, budgets).group.generators)
                probes += list(G.generators)
                part = k_orbits(G, kk, budgets)
                agree = members = 0
                for x in probes:
                    a = preserves_partition(x, part)
                    b = wielandt_member(G, kk, x, budgets)
                    agree += a == b
                    members += a
                note = f"{members}/{len(probes)} in closure"
                return agree, len(probes), agree == len(probes), note

            yield _guarded("korbit-equivalence", entry.name, kk, "both", run)


_RUNNERS = {
    "main-theorem": suite_main_theorem,
    "corollary": suite_corollary,
    "dirsum": suite_dirsum,
    "dirprod": suite_dirprod,
    "cp1": suite_cp1,
    "setwise-stab": suite_setwise_stab,
    "sylow-lemmas": suite_sylow_lemmas,
    "chain": suite_chain,
    "korbit-equivalence": suite_korbit_equivalence,
}


def run_suite(name, k=None, budgets: Budgets = DEFAULT_BUDGETS):
    """Run one suite; returns ``(exit_code, records)``. Exit code 1 on any failure."""
    if name not in _RUNNERS:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    records = []
    for rec in _RUNNERS[name](k=k, budgets=budgets):
        records.append(rec)
    failed = any(r.status == "fail" for r in records)
    return (1 if failed else 0), records


def format_table(records, timings=True):
    header = ["group", "suite", "k", "method", "lhs", "rhs", "status"]
    if timings:
        header.append("ms")
    header.append("note")
    rows = []
    for r in records:
        row = [r.group, r.suite, "-" if r.k is None else str(r.k), r.method,
               "-" if r.order_lhs is None else str(r.order_lhs),
               "-" if r.order_rhs is None else str(r.order_rhs), r.status]
        if timings:
            row.append(f"{r.millis:.1f}")
        row.append(r.note)
        rows.append(row)
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
