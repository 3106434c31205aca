from math import prod

import pytest
from hypothesis import given, strategies as st

from kclosure.catalog import get
from kclosure.errors import DecompositionFailed, NotNilpotent
from kclosure.perm import PermGroup, Permutation, direct_product_action, direct_sum
from kclosure.structure import (PrimeSet, check_hall_orbits, factorize, hall_subgroup,
                                is_nilpotent, n_pi, nilpotency_witness, p_part,
                                prime_divisors, sylow_subgroup, transitive_decompose)

from conftest import cyc, cyclic, entries, entry_ids
from oracles import is_nilpotent_by_center

NILPOTENT = entries(tag="nilpotent")
TRANSITIVE_NILPOTENT = [e for e in NILPOTENT if "transitive" in e.tags]


class TestNPi:
    @pytest.mark.parametrize("n,pi,expected", [(12, {2}, 4), (12, {2, 3}, 12), (100, {3}, 1),
                                               (1, {2}, 1), (360, {2, 5}, 40)])
    def test_values(self, n, pi, expected):
        assert n_pi(n, pi) == expected

    @given(st.integers(1, 5000), st.sets(st.sampled_from([2, 3, 5, 7, 11])))
    def test_coprime_cofactor(self, n, pi):
        from math import gcd
        d = n_pi(n, pi)
        assert n % d == 0 and gcd(d, n // d) == 1
        assert set(factorize(d)) == set(factorize(n)) & pi

    def test_primeset_rejects_composites(self):
        with pytest.raises(ValueError):
            PrimeSet({2, 4})
        assert list(PrimeSet({5, 2, 3})) == [2, 3, 5]


class TestPPart:
    def test_six_cycle(self):
        g = cyc(6, (0, 1, 2, 3, 4, 5))
        assert p_part(g, 2) == cyc(6, (0, 3), (1, 4), (2, 5))
        assert p_part(g, 3) == cyc(6, (0, 4, 2), (1, 5, 3))

    def test_absent_prime(self):
        assert p_part(cyc(4, (0, 1, 2, 3)), 3).is_identity()

    @given(st.permutations(range(9)))
    def test_parts_commute_and_multiply_back(self, images):
        g = Permutation(images)
        primes = list(factorize(g.order()))
        parts = [p_part(g, p) for p in primes]
        for i, a in enumerate(parts):
            assert a.order() == n_pi(g.order(), {primes[i]})
            for b in parts[i + 1:]:
                assert a * b == b * a
        total = Permutation.identity(9)
        for a in parts:
            total = total * a
        assert total == g


class TestSylow:
    def test_c6(self, c6):
        P2 = sylow_subgroup(c6, 2)
        assert P2.generators == (cyc(6, (0, 3), (1, 4), (2, 5)),)
        P3 = sylow_subgroup(c6, 3)
        assert P3.order() == 3 and P3.contains(cyc(6, (0, 4, 2), (1, 5, 3)))

    def test_q8_is_its_own_sylow(self, q8):
        P = sylow_subgroup(q8, 2)
        assert len(P.elements()) == 8 and P.same_group(q8)

    def test_non_nilpotent(self):
        with pytest.raises(NotNilpotent):
            sylow_subgroup(get("S3-natural").group(), 2)

    @pytest.mark.parametrize("entry", NILPOTENT, ids=entry_ids(NILPOTENT))
    def test_sylow_orders(self, entry):
        G = entry.group()
        for p in prime_divisors(G.order()):
            assert sylow_subgroup(G, p).order() == n_pi(G.order(), {p})


class TestNilpotency:
    def test_c6(self, c6):
        w = nilpotency_witness(c6)
        assert [(p, P.order()) for p, P in w.parts] == [(2, 2), (3, 3)]

    @pytest.mark.parametrize("name", ["S3-natural", "D5-natural"])
    def test_negatives(self, name):
        assert not is_nilpotent(get(name).group())

    def test_product_of_cyclics(self):
        G, _ = direct_product_action(cyclic(4), cyclic(3))
        w = nilpotency_witness(G)
        assert [(p, P.order()) for p, P in w.parts] == [(2, 4), (3, 3)]

    def test_products_of_p_groups(self):
        p_groups = [e.group() for e in entries(tag="p-group", max_degree=6)]
        for a in p_groups:
            for b in p_groups:
                assert is_nilpotent(direct_sum(a, b))

    @pytest.mark.parametrize("entry", entries(max_degree=11), ids=entry_ids(entries(max_degree=11)))
    def test_against_central_series(self, entry):
        G = entry.group()
        assert is_nilpotent(G) == is_nilpotent_by_center({g.images for g in G.elements()})

    def test_witness_invariants(self):
        for entry in NILPOTENT:
            G = entry.group()
            w = nilpotency_witness(G)
            assert prod(P.order() for _, P in w.parts) == G.order()
            for p, P in w.parts:
                assert P.is_subgroup_of(G)
                for g in G.generators:
                    for x in P.generators:
                        assert P.contains(g.inverse() * x * g)


class TestHall:
    def test_c6(self, c6):
        assert hall_subgroup(c6, {2, 3}).same_group(c6)
        assert hall_subgroup(c6, {5}).order() == 1

    def test_c4_plus_c3(self):
        G = get("C4+C3-sum").group()
        H = hall_subgroup(G, {3})
        assert H.order() == 3 and H.same_group(PermGroup(7, [cyc(7, (4, 5, 6))]))

    def test_check_c6_parts(self, c6):
        r3 = check_hall_orbits(c6, hall_subgroup(c6, {3}))
        assert r3.orbit_sizes == (3, 3) and r3.expected_size == 3 and r3.ok
        assert r3.kernel_order == 3
        r2 = check_hall_orbits(c6, hall_subgroup(c6, {2}))
        assert r2.orbit_sizes == (2, 2, 2) and r2.ok
        rg = check_hall_orbits(c6, c6)
        assert rg.orbit_sizes == (6,) and rg.kernel_order == 6 and rg.ok

    def test_check_needs_transitive(self):
        with pytest.raises(ValueError):
            G = get("C4+C3-sum").group()
            check_hall_orbits(G, G)

    @pytest.mark.parametrize("entry", TRANSITIVE_NILPOTENT, ids=entry_ids(TRANSITIVE_NILPOTENT))
    def test_orbit_sizes_over_catalog(self, entry):
        G = entry.group()
        primes = list(prime_divisors(G.order()))
        for mask in range(1 << len(primes)):
            pi = {p for i, p in enumerate(primes) if mask >> i & 1}
            report = check_hall_orbits(G, hall_subgroup(G, pi))
            assert set(report.orbit_sizes) == {n_pi(G.degree, pi)}
            assert report.kernel_ok


class TestTransitiveDecompose:
    def test_c6_at_two(self, c6):
        d = transitive_decompose(c6, 2)
        assert [o.members for o in d.p_orbits] == [(0, 3), (1, 4), (2, 5)]
        assert [o.members for o in d.h_orbits] == [(0, 2, 4), (1, 3, 5)]
        assert d.rho[0] == (0, 0)
        assert d.P_prime.degree == 2 and d.P_prime.order() == 2
        assert d.H_prime.degree == 3 and d.H_prime.generators[0].order() == 3
        assert sorted(d.encode(a) for a in range(6)) == list(range(6))

    def test_product_recovers_factors(self):
        G, _ = direct_product_action(cyclic(2), cyclic(3))
        d = transitive_decompose(G, 2)
        assert d.P_prime.order() == 2 and d.P_prime.degree == 2
        assert d.H_prime.order() == 3 and d.H_prime.degree == 3

    @pytest.mark.parametrize("name", ["Q8-regular", "D4-natural", "C8-regular"])
    def test_p_group_degenerate(self, name):
        G = get(name).group()
        d = transitive_decompose(G, 2)
        assert d.H.order() == 1
        assert d.H_prime.degree == 1
        assert d.P_prime.order() == G.order()

    @pytest.mark.parametrize("entry", TRANSITIVE_NILPOTENT, ids=entry_ids(TRANSITIVE_NILPOTENT))
    def test_conjugation_onto_product_action(self, entry):
        G = entry.group()
        for p in prime_divisors(G.order()):
            d = transitive_decompose(G, p)
            product, _ = d.product_group()
            assert {d.conjugate(g) for g in G.elements()} == product.element_set()

    def test_non_nilpotent_rejected(self):
        with pytest.raises((NotNilpotent, DecompositionFailed)):
            transitive_decompose(get("S3-natural").group(), 3)

    def test_prime_must_divide(self, c6):
        with pytest.raises(ValueError):
            transitive_decompose(c6, 5)
