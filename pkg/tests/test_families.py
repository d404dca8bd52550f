import pytest

from annihilator import (
    connected_components,
    degree_sequence,
    is_independent_set,
)
from annihilator.families import (
    FAMILIES,
    build_family,
    c3_plus_singletons,
    c5_two_chords_plus_singleton,
    chorded_cycle_star,
    chorded_cycle_star_witness,
    odd_cycle_plus_odd_path,
    verify_instance,
)
from annihilator.invariants import (
    annihilation_number,
    critical_independence_number,
    independence_number_exact,
    maximum_matching,
)

from oracles import critical_brute


class TestC3PlusSingletons:
    @pytest.mark.parametrize("t", [1, 2, 10])
    def test_manifest_matches_computation(self, t):
        inst = c3_plus_singletons(t)
        assert inst.graph.n == t + 3
        ok, records = verify_instance(inst)
        assert ok, records

    def test_component_count(self):
        for t in (1, 4, 7):
            assert len(connected_components(c3_plus_singletons(t).graph)) == t + 1

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            c3_plus_singletons(0)


class TestC5TwoChords:
    def test_degree_sequence(self):
        inst = c5_two_chords_plus_singleton()
        assert degree_sequence(inst.graph) == [3, 3, 3, 3, 2, 0]

    def test_invariants(self):
        inst = c5_two_chords_plus_singleton()
        ok, records = verify_instance(inst)
        assert ok, records
        assert critical_brute(inst.graph) == (1, 1)


class TestChordedCycleStar:
    @pytest.mark.parametrize("k,n,value", [(2, 8, 4), (3, 10, 5), (4, 12, 6)])
    def test_figure_values(self, k, n, value):
        inst = chorded_cycle_star(k)
        assert inst.graph.n == n
        assert independence_number_exact(inst.graph)[0] == value
        assert annihilation_number(inst.graph)[0] == value
        assert critical_independence_number(inst.graph)[0] == 2

    def test_degree_structure(self):
        for k in (2, 5, 11):
            g = chorded_cycle_star(k).graph
            assert degree_sequence(g) == [3] * (2 * k + 2) + [1, 1]

    def test_connected(self):
        for k in range(2, 12):
            assert len(connected_components(chorded_cycle_star(k).graph)) == 1

    def test_matching_number(self):
        for k in (2, 3, 4, 7):
            assert maximum_matching(chorded_cycle_star(k).graph)[0] == k + 1

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            chorded_cycle_star(1)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_witness_formula_instances(self, k):
        # Frozen index sets from the explicit parity formulas.
        expected = {
            2: {6, 7, 4, 1},
            3: {8, 9, 6, 1, 3},
            4: {10, 11, 8, 1, 3, 6},
        }[k]
        assert chorded_cycle_star_witness(k) == expected

    def test_witness_independent_up_to_50(self):
        for k in range(2, 51):
            g = chorded_cycle_star(k).graph
            witness = chorded_cycle_star_witness(k)
            assert len(witness) == k + 2
            assert is_independent_set(g, witness)

    def test_alpha_plus_mu_below_order(self):
        for k in range(2, 13):
            g = chorded_cycle_star(k).graph
            alpha = independence_number_exact(g)[0]
            mu = maximum_matching(g)[0]
            assert alpha == k + 2
            assert alpha + mu < g.n


class TestOddCyclePlusOddPath:
    @pytest.mark.parametrize(
        "k,l,alpha,ac",
        [(2, 1, 4, 2), (1, 1, 3, 2), (3, 2, 6, 3)],
    )
    def test_oracle_values(self, k, l, alpha, ac):
        g = odd_cycle_plus_odd_path(k, l).graph
        assert g.n == 2 * k + 2 * l + 2
        assert independence_number_exact(g)[0] == alpha
        assert annihilation_number(g)[0] == alpha
        # The cycle contributes difference 0, the odd path exactly 1.
        assert critical_brute(g) == (1, ac)

    def test_manifest(self):
        for k, l in [(1, 1), (2, 1), (2, 2), (3, 1)]:
            ok, records = verify_instance(odd_cycle_plus_odd_path(k, l))
            assert ok, records

    def test_two_components(self):
        assert len(connected_components(odd_cycle_plus_odd_path(2, 3).graph)) == 2

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            odd_cycle_plus_odd_path(0, 1)
        with pytest.raises(ValueError):
            odd_cycle_plus_odd_path(1, 0)


class TestRegistry:
    def test_build_family_dispatch(self):
        inst = build_family("chorded-cycle-star", k=3)
        assert inst.graph.n == 10

    def test_every_family_verifies(self):
        samples = {
            "c3-singletons": {"t": 2},
            "c5-two-chords-singleton": {},
            "chorded-cycle-star": {"k": 2},
            "cycle-plus-path": {"k": 1, "l": 1},
        }
        assert set(samples) == set(FAMILIES)
        for name, params in samples.items():
            ok, records = verify_instance(build_family(name, **params))
            assert ok, (name, records)

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            build_family("moebius-kantor")

    def test_wrong_parameters(self):
        with pytest.raises(ValueError, match="takes parameters"):
            build_family("chorded-cycle-star", t=2)
